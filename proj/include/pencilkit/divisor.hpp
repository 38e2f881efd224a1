#pragma once

#include <map>
#include <string>
#include <vector>

#include "pencilkit/config.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/factor.hpp"
#include "pencilkit/gcd.hpp"

namespace pk {

/// Finite integer combination of Q-irreducible canonical forms of one arity.
/// Zero multiplicities are never stored. Arity 3 gives divisors on the
/// plane, arity 2 divisors on the line.
template <int Arity>
class Divisor {
 public:
  using Entries = std::map<CanonicalForm, int>;

  Divisor() = default;

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Adds mult * form; form must already be canonical and irreducible.
  void add(const CanonicalForm& form, int mult) {
    if (form.arity() != Arity) throw Error(ErrorKind::ArityMismatch, "divisor: wrong arity");
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(form, mult);
    if (!inserted && (it->second += mult) == 0) entries_.erase(it);
  }

  int multiplicity(const CanonicalForm& form) const {
    auto it = entries_.find(form);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Sum of multiplicity * degree.
  int degree() const {
    int d = 0;
    for (const auto& [f, m] : entries_) d += m * f.degree();
    return d;
  }

  bool is_effective() const {
    for (const auto& [f, m] : entries_) {
      if (m < 0) return false;
    }
    return true;
  }

  std::vector<CanonicalForm> support() const {
    std::vector<CanonicalForm> out;
    for (const auto& [f, m] : entries_) out.push_back(f);
    return out;
  }

  Divisor& operator+=(const Divisor& o) {
    for (const auto& [f, m] : o.entries_) add(f, m);
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    for (const auto& [f, m] : o.entries_) add(f, -m);
    return *this;
  }
  Divisor& operator*=(int k) {
    if (k == 0) {
      entries_.clear();
    } else {
      for (auto& [f, m] : entries_) m *= k;
    }
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, Divisor a) { return a *= k; }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }

  /// `m1*(form1) + m2*(form2)`, or `0` when empty.
  std::string to_string() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [f, m] : entries_) {
      if (!out.empty()) out += m < 0 ? " - " : " + ";
      else if (m < 0) out += "-";
      out += std::to_string(m < 0 ? -m : m) + "*(" + f.to_string() + ")";
    }
    return out;
  }

 private:
  Entries entries_;
};

using PlaneDivisor = Divisor<3>;
using LineDivisor = Divisor<2>;

/// Divisor of a nonzero homogeneous ternary form.
PlaneDivisor plane_divisor_of(const MultiPoly& p, const Config& config = {});
/// Divisor of a nonzero binary form; points are grouped by Q-irreducible
/// factor, so a quadratic point pair counts with degree 2.
LineDivisor line_divisor_of(const MultiPoly& p, const Config& config = {});

/// Each multiplicity m becomes m - 1. The input must be effective.
template <int Arity>
Divisor<Arity> ramification_part(const Divisor<Arity>& d) {
  if (!d.is_effective()) throw Error(ErrorKind::Precondition, "ramification_part: divisor is not effective");
  Divisor<Arity> out;
  for (const auto& [f, m] : d.entries()) out.add(f, m - 1);
  return out;
}

/// Remainder of p under multivariate division by c in grlex order. Since a
/// single polynomial is a Groebner basis of its ideal, the result is a
/// normal form: it vanishes exactly when c divides p.
MultiPoly normal_form(const MultiPoly& p, const MultiPoly& c);

}  // namespace pk
