#include "pencilkit/gcd.hpp"

#include "pencilkit/errors.hpp"

namespace pk {

Scalar canonical_scale(const MultiPoly& p) {
  if (p.is_zero()) return Scalar(1);
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Scalar scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (sgn(p.leading_coeff()) < 0) scale = -scale;
  return scale;
}

MultiPoly canonicalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / canonical_scale(p));
}

CanonicalForm::CanonicalForm(const MultiPoly& p) : poly_(canonicalize(p)) {}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  const auto da = a.poly_.degree().value_or(-1);
  const auto db = b.poly_.degree().value_or(-1);
  if (da != db) return da < db;
  auto ia = a.poly_.terms().begin();
  auto ib = b.poly_.terms().begin();
  const GrlexGreater greater;
  for (; ia != a.poly_.terms().end() && ib != b.poly_.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.poly_.terms().end() && ib != b.poly_.terms().end();
}

namespace {

int pick_variable(const MultiPoly& p, const MultiPoly& q) {
  int best = -1;
  int best_cost = 0;
  for (int v = 0; v < p.arity(); ++v) {
    const int dp = p.degree_in(v).value_or(0);
    const int dq = q.degree_in(v).value_or(0);
    if (dp == 0 && dq == 0) continue;
    const int cost = dp + dq;
    if (best < 0 || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

/// Pseudo-remainder of a by b in var, without tracking the multiplier.
MultiPoly prem(MultiPoly a, const MultiPoly& b, int var) {
  const auto cb = coefficients_in(b, var);
  const int db = static_cast<int>(cb.size()) - 1;
  const MultiPoly& lb = cb.back();
  while (!a.is_zero()) {
    const int da = *a.degree_in(var);
    if (da < db) break;
    MultiPoly la = coefficients_in(a, var).back();
    a = lb * a - (la * b).shifted(var, da - db);
  }
  return a;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

MultiPoly content_of(const std::vector<MultiPoly>& coeffs) {
  MultiPoly g(coeffs.empty() ? 3 : coeffs[0].arity());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return canonicalize(q);
  if (q.is_zero()) return canonicalize(p);
  const int var = pick_variable(p, q);
  const int arity = p.arity();
  if (var < 0) return MultiPoly::constant(arity, 1);
  if (!p.depends_on(var)) return gcd_rec(p, content_of(coefficients_in(q, var)));
  if (!q.depends_on(var)) return gcd_rec(q, content_of(coefficients_in(p, var)));

  MultiPoly cp = content_of(coefficients_in(p, var));
  MultiPoly cq = content_of(coefficients_in(q, var));
  MultiPoly c = gcd_rec(cp, cq);
  MultiPoly a = canonicalize(exact_quotient(p, cp));
  MultiPoly b = canonicalize(exact_quotient(q, cq));
  if (*a.degree_in(var) < *b.degree_in(var)) std::swap(a, b);
  while (true) {
    MultiPoly r = prem(a, b, var);
    if (r.is_zero()) break;
    if (!r.depends_on(var)) {
      b = MultiPoly::constant(arity, 1);
      break;
    }
    a = std::move(b);
    b = canonicalize(exact_quotient(r, content_of(coefficients_in(r, var))));
  }
  b = exact_quotient(b, content_of(coefficients_in(b, var)));
  return canonicalize(c * b);
}

}  // namespace

MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q) {
  if (p.arity() != q.arity()) throw Error(ErrorKind::ArityMismatch, "gcd: arity mismatch");
  return gcd_rec(p, q);
}

CanonicalForm gcd(const MultiPoly& p, const MultiPoly& q) { return CanonicalForm(gcd_poly(p, q)); }

MultiPoly content_in(const MultiPoly& p, int var) {
  return content_of(coefficients_in(p, var));
}

std::vector<std::pair<MultiPoly, int>> squarefree_in(const MultiPoly& f, int var) {
  std::vector<std::pair<MultiPoly, int>> out;
  if (!f.depends_on(var)) return out;
  MultiPoly fp = f.partial(var);
  MultiPoly a0 = gcd_poly(f, fp);
  MultiPoly b = exact_quotient(f, a0);
  MultiPoly c = exact_quotient(fp, a0);
  MultiPoly d = c - b.partial(var);
  int i = 1;
  while (b.depends_on(var)) {
    MultiPoly a = gcd_poly(b, d);
    if (a.depends_on(var)) out.emplace_back(canonicalize(a), i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.partial(var);
    ++i;
  }
  return out;
}

}  // namespace pk
