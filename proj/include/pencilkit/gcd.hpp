#pragma once

#include <utility>
#include <vector>

#include "pencilkit/poly.hpp"

namespace pk {

/// Primitive, sign-normalized integer polynomial: content 1 and positive
/// grlex-leading coefficient. Equal canonical forms have identical terms.
class CanonicalForm {
 public:
  CanonicalForm() : poly_(3) {}
  /// Canonicalizes p (any nonzero rational multiple maps to the same form).
  explicit CanonicalForm(const MultiPoly& p);

  const MultiPoly& poly() const { return poly_; }
  int arity() const { return poly_.arity(); }
  int degree() const { return poly_.degree().value_or(0); }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.poly_ == b.poly_;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);

 private:
  MultiPoly poly_;
};

/// The rational c with p = c * canonicalize(p).
Scalar canonical_scale(const MultiPoly& p);
MultiPoly canonicalize(const MultiPoly& p);

/// Exact gcd over Q, returned canonicalized; gcd(0, p) = canonical p.
CanonicalForm gcd(const MultiPoly& p, const MultiPoly& q);
/// Same, without the wrapper.
MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q);

/// gcd of the coefficients of p viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& p, int var);

/// Yun decomposition with respect to var. Every irreducible factor of f must
/// involve var (e.g. f monic in var); parts are canonicalized.
std::vector<std::pair<MultiPoly, int>> squarefree_in(const MultiPoly& f, int var);

}  // namespace pk
