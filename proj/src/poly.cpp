#include "pencilkit/poly.hpp"

#include <sstream>

#include "pencilkit/errors.hpp"

namespace pk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::FixedComponent: return "FixedComponent";
    case ErrorKind::Proportional: return "Proportional";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnresolvedAlgebraicMember: return "UnresolvedAlgebraicMember";
    case ErrorKind::NormConstructionBound: return "NormConstructionBound";
    case ErrorKind::BadLine: return "BadLine";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::DichotomyViolation: return "DichotomyViolation";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Syntax: return "SyntaxError";
  }
  return "Unknown";
}

std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

const char* variable_name(int arity, int index) {
  static const char* ternary[] = {"x", "y", "z"};
  static const char* binary[] = {"u", "v"};
  return arity == 2 ? binary[index] : ternary[index];
}

namespace {

void check_arity(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::ArityMismatch,
                "arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity != 2 && arity != 3) {
    throw Error(ErrorKind::ArityMismatch, "arity must be 2 or 3");
  }
}

MultiPoly MultiPoly::constant(int arity, const Scalar& c) {
  MultiPoly p(arity);
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(arity, e);
}

MultiPoly MultiPoly::monomial(int arity, const Exponents& e, const Scalar& c) {
  MultiPoly p(arity);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

std::optional<int> MultiPoly::degree_in(int var) const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::depends_on(int var) const {
  for (const auto& [e, c] : terms_) {
    if (e[var] > 0) return true;
  }
  return false;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

Scalar MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const std::pair<const Exponents, Scalar>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading term of zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(arity_, o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(arity_, o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_arity(a.arity_, b.arity_);
  MultiPoly r(a.arity_);
  Scalar prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, prod);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != arity_) {
    throw Error(ErrorKind::ArityMismatch, "evaluation point has wrong length");
  }
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < arity_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != arity_) {
    throw Error(ErrorKind::ArityMismatch, "compose: expected " + std::to_string(arity_) +
                                              " images, got " + std::to_string(images.size()));
  }
  const int out_arity = images[0].arity();
  std::optional<int> image_degree;
  for (const auto& img : images) {
    check_arity(out_arity, img.arity());
    if (img.is_zero()) continue;
    if (!img.is_homogeneous()) {
      throw Error(ErrorKind::NotHomogeneous, "compose: image is not homogeneous");
    }
    if (image_degree && *image_degree != *img.degree()) {
      throw Error(ErrorKind::DegreeMismatch, "compose: images have different degrees");
    }
    image_degree = img.degree();
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::array<std::vector<MultiPoly>, 3> powers;
  auto power_of = [&](int i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(out_arity, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly result(out_arity);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(out_arity, c);
    for (int i = 0; i < arity_; ++i) {
      if (e[i] > 0) t *= power_of(i, e[i]);
    }
    result += t;
  }
  return result;
}

MultiPoly MultiPoly::substitute(int var, const Scalar& value) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    Scalar v = c;
    for (int k = 0; k < e[var]; ++k) v *= value;
    r.add_term(f, v);
  }
  return r;
}

MultiPoly MultiPoly::shifted(int var, int k) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] += k;
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || var >= arity_) {
    throw Error(ErrorKind::ArityMismatch, "partial: variable index out of range");
  }
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::with_arity(int arity) const {
  MultiPoly r(arity);
  for (const auto& [e, c] : terms_) {
    if (arity == 2 && e[2] != 0) {
      throw Error(ErrorKind::ArityMismatch, "with_arity: third variable in use");
    }
    r.terms_.emplace(e, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    Scalar mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = total_degree(e) == 0;
    bool need_star = false;
    if (is_const || mag != 1) {
      os << scalar_to_string(mag);
      need_star = true;
    }
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << variable_name(arity_, i);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  check_arity(p.arity(), d.arity());
  if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  MultiPoly q(p.arity());
  MultiPoly r = p;
  const auto& [de, dc] = d.leading_term();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    Exponents qe{re[0] - de[0], re[1] - de[1], re[2] - de[2]};
    if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0) return std::nullopt;
    Scalar qc = rc / dc;
    MultiPoly t = MultiPoly::monomial(p.arity(), qe, qc);
    q.add_term(qe, qc);
    r -= t * d;
  }
  return q;
}

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw Error(ErrorKind::Precondition, "inexact polynomial division");
  return *std::move(q);
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
  std::vector<MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    const int k = e[var];
    while (static_cast<int>(out.size()) <= k) out.emplace_back(p.arity());
    Exponents f = e;
    f[var] = 0;
    out[k].add_term(f, c);
  }
  return out;
}

}  // namespace pk
