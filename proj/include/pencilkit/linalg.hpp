#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pencilkit/poly.hpp"

namespace pk {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using RationalMatrix = Matrix<Scalar>;

inline bool is_zero_entry(const Scalar& s) { return sgn(s) == 0; }
inline bool is_zero_entry(const MultiPoly& p) { return p.is_zero(); }
inline Scalar divide_entry(const Scalar& a, const Scalar& b) { return a / b; }
inline MultiPoly divide_entry(const MultiPoly& a, const MultiPoly& b) {
  return exact_quotient(a, b);
}

/// Fraction-free (Bareiss) determinant. Works over any integral domain with
/// exact division; `one` fixes the unit element (and arity, for polynomials).
template <class T>
T bareiss_det(Matrix<T> a, const T& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero_entry(a[p][k])) ++p;
    if (p == n) return one * Scalar(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = is_zero_entry(a[i][k]);
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = a[i][j] * a[k][k];
        if (!lead_zero && !is_zero_entry(a[k][j])) t = t - a[i][k] * a[k][j];
        a[i][j] = is_zero_entry(t) ? t : divide_entry(t, prev);
      }
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? det * Scalar(-1) : det;
}

/// Row-reduced echelon form over Q; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a);

std::size_t rank(RationalMatrix a);

/// Solves a*x = b exactly; nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<Scalar>> solve(const RationalMatrix& a, const std::vector<Scalar>& b);

/// Basis of the right kernel of a.
std::vector<std::vector<Scalar>> nullspace(RationalMatrix a);

/// 3x3 helpers for coordinate changes.
using Mat3 = std::array<std::array<Scalar, 3>, 3>;
Scalar det3(const Mat3& m);
std::optional<Mat3> inverse3(const Mat3& m);
Mat3 identity3();

}  // namespace pk
