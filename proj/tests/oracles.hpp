#pragma once

#include <random>
#include <vector>

#include "pencilkit/poly.hpp"

namespace oracle {

using pk::Integer;
using pk::MultiPoly;
using pk::Scalar;

/// Every integer divisor of degree s of the integer polynomial f (low to
/// high), leading coefficient positive, found by Kronecker interpolation.
std::vector<std::vector<Integer>> kronecker_divisors(const std::vector<Integer>& f, int s);

/// Irreducibility over Q of a homogeneous form of degree <= 4 in 2 or 3
/// variables, decided by brute force on coordinate-line restrictions.
bool irreducible(const MultiPoly& form);

/// Random homogeneous form with integer coefficients in [-c, c].
MultiPoly random_form(std::mt19937_64& rng, int arity, int degree, int c, double density = 0.6);

/// Random nonzero rational in [-n, n] with denominator up to den.
Scalar random_scalar(std::mt19937_64& rng, int n, int den);

}  // namespace oracle
