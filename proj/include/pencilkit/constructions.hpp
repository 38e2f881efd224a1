#pragma once

#include <array>
#include <random>

#include "pencilkit/linalg.hpp"
#include "pencilkit/poly.hpp"

namespace pk {

/// det of the 3x3 Jacobian of (P, Q, R); its divisor is the ramification
/// divisor of [P:Q:R]. Zero means the map is not dominant.
MultiPoly jacobian_det3(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r);

/// d(g0)/du * d(g1)/dv - d(g0)/dv * d(g1)/du.
MultiPoly wronskian2(const MultiPoly& g0, const MultiPoly& g1);

/// 2x2 minors of the matrix of partials of (A, B), ordered (xy, xz, yz).
std::array<MultiPoly, 3> minors2x3(const MultiPoly& a, const MultiPoly& b);

/// p(M * (x, y, z)^T): variable i is replaced by sum_j M[i][j] * x_j.
/// Throws SingularMatrix when M is not invertible.
MultiPoly linear_change(const MultiPoly& p, const Mat3& m);

/// Random integer matrix with determinant 1 (product of unit triangular
/// factors with entries in [-range, range]).
Mat3 random_unimodular(std::mt19937_64& rng, int range);

/// Homogenizes a polynomial in x, y (z unused) to the given degree using z.
MultiPoly homogenize_z(const MultiPoly& p, int degree);

}  // namespace pk
