#pragma once

#include <utility>
#include <vector>

#include "pencilkit/config.hpp"
#include "pencilkit/gcd.hpp"
#include "pencilkit/poly.hpp"

namespace pk {

/// unit * prod(factor^multiplicity), factors irreducible over Q and sorted.
struct Factorization {
  Scalar unit = 1;
  std::vector<std::pair<CanonicalForm, int>> factors;

  MultiPoly expand(int arity) const;
  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

/// Complete factorization over Q.
///
/// Accepts homogeneous polynomials of arity 2 or 3 and arbitrary binary
/// polynomials. Throws DegreeBoundExceeded above config.degree_bound.
Factorization factor(const MultiPoly& p, const Config& config = {});

namespace detail {

/// Factors a primitive square-free integer polynomial (coefficients low to
/// high) into irreducibles over Z. Exposed for tests.
std::vector<std::vector<Integer>> factor_squarefree_z(const std::vector<Integer>& f,
                                                      std::uint64_t seed = kDefaultSeed);

}  // namespace detail

}  // namespace pk
