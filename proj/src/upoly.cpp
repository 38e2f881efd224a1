#include "pencilkit/detail/upoly.hpp"

#include "pencilkit/errors.hpp"

namespace pk::detail {

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Scalar& s) {
  for (auto& v : a.c_) v *= s;
  a.trim();
  return a;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Scalar(1) / lead());
}

Scalar UPoly::evaluate(const Scalar& t) const {
  Scalar v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "univariate division by zero");
  std::vector<Scalar> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Scalar> q(a.degree() - db + 1, Scalar(0));
  const Scalar inv = Scalar(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Scalar f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = Scalar(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  UPoly fp = f.derivative();
  UPoly a0 = gcd(f, fp);
  UPoly b = divrem(f, a0).first;
  UPoly c = divrem(fp, a0).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UPoly to_upoly(const MultiPoly& p, int var) {
  std::vector<Scalar> c;
  for (const auto& [e, v] : p.terms()) {
    for (int i = 0; i < 3; ++i) {
      if (i != var && e[i] != 0) {
        throw Error(ErrorKind::Precondition, "to_upoly: polynomial involves other variables");
      }
    }
    if (static_cast<int>(c.size()) <= e[var]) c.resize(e[var] + 1, Scalar(0));
    c[e[var]] = v;
  }
  return UPoly(std::move(c));
}

MultiPoly from_upoly(const UPoly& u, int arity, int var) {
  MultiPoly p(arity);
  for (int i = 0; i <= u.degree(); ++i) {
    Exponents e{0, 0, 0};
    e[var] = i;
    p.add_term(e, u[i]);
  }
  return p;
}

}  // namespace pk::detail
