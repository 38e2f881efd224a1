#pragma once

#include <utility>
#include <vector>

#include "pencilkit/poly.hpp"

namespace pk::detail {

/// Dense univariate polynomial over Q, index = power. Always trimmed, so the
/// zero polynomial is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Scalar& v) { return UPoly(std::vector<Scalar>{v}); }
  static UPoly x() { return UPoly(std::vector<Scalar>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Scalar& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const;
  UPoly monic() const;
  Scalar evaluate(const Scalar& t) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
inline UPoly rem(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }
/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

/// Yun's square-free decomposition of a nonconstant polynomial: monic
/// pairwise-coprime parts paired with multiplicities.
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f);

/// Dense univariate view of a MultiPoly that involves only `var`.
UPoly to_upoly(const MultiPoly& p, int var);
MultiPoly from_upoly(const UPoly& u, int arity, int var);

}  // namespace pk::detail
