#pragma once

#include <array>

#include "pencilkit/config.hpp"
#include "pencilkit/linalg.hpp"
#include "pencilkit/poly.hpp"

namespace pk {

/// Sylvester resultant of p and q with respect to `var`, computed as a
/// fraction-free determinant. Throws ZeroInput when both are zero.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

/// Largest Macaulay matrix (rows) the resultant routines will build.
inline constexpr std::size_t kMacaulayMaxSize = 600;

/// Resultant of three ternary forms: zero iff they share a projective zero
/// over the algebraic closure. Uses det(M)/det(E) on the Macaulay matrix; a
/// vanishing extraneous minor triggers a seeded determinant-one coordinate
/// change, which leaves the value unchanged.
Scalar macaulay_resultant3(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r,
                           const Config& config = {});

/// Three forms depending linearly on a parameter [l:m]:
/// form_i = l * at_l[i] + m * at_m[i], homogeneous of degree degrees[i]
/// (a form may vanish identically).
struct LinearFormTriple {
  std::array<MultiPoly, 3> at_l{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  std::array<MultiPoly, 3> at_m{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  std::array<int, 3> degrees{};
};

/// Resultant of a linear triple as a binary form in (l, m) (printed as u, v).
/// Identically zero when every member of the family has a common zero.
MultiPoly macaulay_resultant3(const LinearFormTriple& forms);

/// Lowest-order coefficient in s of Res(F_i + s * x_i^{d_i}). Equals the
/// resultant when that is not identically zero; otherwise it still vanishes
/// at the parameters carrying common zeros beyond the persistent ones.
MultiPoly macaulay_trailing_form(const LinearFormTriple& forms);

/// Test-facing: the full Macaulay matrix over all multiples m*F_i of degree
/// D = d1+d2+d3-2 (more rows than columns).
RationalMatrix macaulay_full_matrix(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r);

}  // namespace pk
