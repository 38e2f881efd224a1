#pragma once

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pk {

/// Exact rational; gmp keeps it in lowest terms with positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Exponent vector. Binary forms leave the last slot at zero.
using Exponents = std::array<int, 3>;

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order with x > y > z (u > v), largest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

std::string scalar_to_string(const Scalar& c);

/// Sparse polynomial in 2 (u,v) or 3 (x,y,z) variables over Q.
///
/// Terms are kept in a map ordered by GrlexGreater, so iteration starts at
/// the leading term. Zero coefficients are never stored; the zero polynomial
/// is the empty map and has no degree.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  explicit MultiPoly(int arity = 3);

  static MultiPoly constant(int arity, const Scalar& c);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, const Exponents& e, const Scalar& c = 1);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Degree in one variable, or nullopt for the zero polynomial.
  std::optional<int> degree_in(int var) const;
  bool depends_on(int var) const;
  bool is_homogeneous() const;

  Scalar coeff(const Exponents& e) const;
  /// Leading (grlex-largest) term; the polynomial must be nonzero.
  const std::pair<const Exponents, Scalar>& leading_term() const;
  const Scalar& leading_coeff() const { return leading_term().second; }

  void add_term(const Exponents& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const;
  MultiPoly scaled(const Scalar& c) const { return *this * c; }

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Substitutes images[i] for variable i. Images share one arity, which
  /// becomes the arity of the result.
  MultiPoly compose(std::span<const MultiPoly> images) const;

  /// Sets one variable to a constant; arity is unchanged.
  MultiPoly substitute(int var, const Scalar& value) const;

  /// Multiplies by var^k.
  MultiPoly shifted(int var, int k) const;

  MultiPoly partial(int var) const;

  /// Same terms viewed with another arity; the dropped slot must be unused.
  MultiPoly with_arity(int arity) const;

  /// Graded-lex text with explicit `*` and `^`.
  std::string to_string() const;

 private:
  int arity_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

const char* variable_name(int arity, int index);

/// Exact quotient p/d, or nullopt when d does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

/// Like divide_exact but throws when the division is not exact.
MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& d);

/// Coefficients of p as a polynomial in `var` (index = power); the
/// coefficients keep the arity of p and do not involve var.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var);

}  // namespace pk
