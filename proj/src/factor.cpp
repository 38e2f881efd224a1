#include "pencilkit/factor.hpp"

#include <algorithm>
#include <random>

#include "pencilkit/constructions.hpp"
#include "pencilkit/detail/upoly.hpp"
#include "pencilkit/errors.hpp"

namespace pk {

using detail::UPoly;

MultiPoly Factorization::expand(int arity) const {
  MultiPoly r = MultiPoly::constant(arity, unit);
  for (const auto& [f, m] : factors) r *= f.poly().pow(m);
  return r;
}

namespace detail {
namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (coefficients low to high).

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly f) {
  Integer g = content(f);
  if (sgn(g) == 0) return f;
  if (sgn(f.back()) < 0) g = -g;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return f;
}

/// Exact quotient over Z, or empty optional when b does not divide a.
std::optional<ZPoly> divide_z(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const int db = deg(b);
  if (deg(a) < db) return sgn(content(a)) == 0 ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly q(deg(a) - db + 1, Integer(0));
  Integer qc;
  for (int i = deg(a); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    q[i - db] = qc;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= qc * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

void reduce_symmetric(ZPoly& f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
}

void reduce_positive(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
}

// ---------------------------------------------------------------------------
// Polynomials over F_p with p < 2^31.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly to_mod(const ZPoly& f, const Field& k) {
  ModPoly r(f.size());
  Integer t;
  const Integer p(static_cast<unsigned long>(k.p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_mod(t.get_mpz_t(), f[i].get_mpz_t(), p.get_mpz_t());
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

ZPoly to_z(const ModPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Field& k) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b, const Field& k) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& k) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % k.p;
  }
  trim(r);
  return r;
}

ModPoly scale(ModPoly a, u64 s, const Field& k) {
  for (auto& c : a) c = k.mul(c, s);
  trim(a);
  return a;
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b, const Field& k) {
  ModPoly r = a;
  const int db = deg(b);
  if (deg(a) < db) return {{}, a};
  ModPoly q(deg(a) - db + 1, 0);
  const u64 inv = k.inv(b.back());
  for (int i = deg(a); i >= db; --i) {
    if (r[i] == 0) continue;
    const u64 f = k.mul(r[i], inv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(f, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly monic(ModPoly a, const Field& k) {
  if (a.empty()) return a;
  const u64 inv = k.inv(a.back());
  return scale(std::move(a), inv, k);
}

ModPoly gcd(ModPoly a, ModPoly b, const Field& k) {
  while (!b.empty()) {
    ModPoly r = divrem(a, b, k).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), k);
}

/// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, const Field& k) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, k);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, k), k);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, k), k);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = k.inv(r0.back());
  return {scale(s0, inv, k), scale(t0, inv, k)};
}

ModPoly powmod(ModPoly base, Integer e, const ModPoly& m, const Field& k) {
  ModPoly result{1};
  base = divrem(base, m, k).second;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divrem(mul(result, base, k), m, k).second;
    e >>= 1;
    if (sgn(e) > 0) base = divrem(mul(base, base, k), m, k).second;
  }
  return result;
}

ModPoly derivative(const ModPoly& f, const Field& k) {
  ModPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(k.mul(f[i], i % k.p));
  trim(r);
  return r;
}

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting of a monic
/// square-free polynomial over F_p, p odd.
std::vector<ModPoly> factor_mod_p(ModPoly f, const Field& k, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> by_degree;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(k.p)), f, k);
    ModPoly g = gcd(sub(h, x, k), f, k);
    if (deg(g) > 0) {
      by_degree.emplace_back(g, d);
      f = divrem(f, g, k).first;
      h = divrem(h, f, k).second;
    }
  }
  if (deg(f) > 0) by_degree.emplace_back(f, deg(f));

  std::vector<ModPoly> out;
  std::uniform_int_distribution<u64> coeff(0, k.p - 1);
  for (auto& [g, d] : by_degree) {
    std::vector<ModPoly> todo{g};
    while (!todo.empty()) {
      ModPoly cur = std::move(todo.back());
      todo.pop_back();
      if (deg(cur) == d) {
        out.push_back(monic(std::move(cur), k));
        continue;
      }
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), k.p, d);
      e = (e - 1) / 2;
      while (true) {
        ModPoly a(deg(cur));
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = sub(powmod(a, e, cur, k), ModPoly{1}, k);
        ModPoly s = gcd(b, cur, k);
        if (deg(s) > 0 && deg(s) < deg(cur)) {
          todo.push_back(divrem(cur, s, k).first);
          todo.push_back(std::move(s));
          break;
        }
      }
    }
  }
  return out;
}

/// Lifts f = G*H (mod p) to (mod p^K) with G monic and lc(H) = lc(f).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const ModPoly& g, const ModPoly& h,
                                    const Field& k, int steps, const Integer& modulus) {
  auto [s, t] = bezout(g, h, k);
  ZPoly gz = to_z(g);
  ZPoly hz = to_z(h);
  hz.back() = f.back();
  reduce_positive(hz, modulus);
  Integer m(static_cast<unsigned long>(k.p));
  const Integer p = m;
  for (int step = 1; step < steps; ++step) {
    ZPoly diff = f;
    ZPoly gh = mul(gz, hz);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    reduce_positive(diff, modulus);
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ModPoly e = to_mod(diff, k);
    auto [q, r] = divrem(mul(e, t, k), g, k);
    ModPoly dh = add(mul(e, s, k), mul(q, h, k), k);
    ZPoly dgz = to_z(r);
    ZPoly dhz = to_z(dh);
    gz.resize(std::max(gz.size(), dgz.size()), Integer(0));
    for (std::size_t i = 0; i < dgz.size(); ++i) gz[i] += m * dgz[i];
    hz.resize(std::max(hz.size(), dhz.size()), Integer(0));
    for (std::size_t i = 0; i < dhz.size(); ++i) hz[i] += m * dhz[i];
    reduce_positive(gz, modulus);
    reduce_positive(hz, modulus);
    m *= p;
  }
  return {gz, hz};
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors,
                               const Field& k, int steps, const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly cur = f;
  reduce_positive(cur, modulus);
  const u64 lc = to_mod(ZPoly{f.back()}, k)[0];
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest{lc};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], k);
    auto [g, h] = hensel_pair(cur, factors[i], rest, k, steps, modulus);
    out.push_back(std::move(g));
    cur = std::move(h);
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : cur) c *= inv;
  reduce_positive(cur, modulus);
  out.push_back(std::move(cur));
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Enumerates subsets of {0..n-1} of size s in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& input, std::uint64_t seed) {
  ZPoly f = primitive(input);
  trim(f);
  if (deg(f) <= 1) return {f};
  std::mt19937_64 rng(seed);

  // Pick the prime with the fewest modular factors among a few good ones.
  std::vector<ModPoly> best;
  Field best_field{0};
  int good = 0;
  for (u64 p = 10007; good < 4; p += 2) {
    if (!is_prime(p)) continue;
    const Field k{p};
    ModPoly fm = to_mod(f, k);
    if (deg(fm) != deg(f)) continue;
    if (deg(gcd(fm, derivative(fm, k), k)) > 0) continue;
    auto facs = factor_mod_p(monic(fm, k), k, rng);
    ++good;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_field = k;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Mignotte-style bound for lc(f) * (any factor), with slack.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(deg(f)));
  bound *= 2;
  Integer modulus(static_cast<unsigned long>(best_field.p));
  int steps = 1;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_field.p);
    ++steps;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_field, steps, modulus);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  int s = 1;
  while (2 * s <= static_cast<int>(lifted.size())) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    do {
      ZPoly cand{rest.back()};
      for (int i : idx) {
        cand = mul(cand, lifted[i]);
        reduce_symmetric(cand, modulus);
      }
      cand = primitive(cand);
      if (auto q = divide_z(rest, cand)) {
        found.push_back(cand);
        rest = *q;
        for (int i = s - 1; i >= 0; --i) lifted.erase(lifted.begin() + idx[i]);
        hit = true;
        break;
      }
    } while (next_combination(idx, static_cast<int>(lifted.size())));
    if (!hit) ++s;
  }
  if (deg(rest) > 0) found.push_back(primitive(rest));
  return found;
}

namespace {

/// Monic irreducible factors over Q with multiplicities.
std::vector<std::pair<UPoly, int>> factor_univariate_q(const UPoly& f, std::uint64_t seed) {
  std::vector<std::pair<UPoly, int>> out;
  for (const auto& [part, mult] : squarefree(f)) {
    Integer den = 1;
    for (const auto& c : part.coeffs()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    ZPoly z;
    for (const auto& c : part.coeffs()) {
      Scalar t = c * den;
      z.push_back(t.get_num());
    }
    for (const auto& irr : factor_squarefree_z(z, seed)) {
      std::vector<Scalar> q;
      for (const auto& c : irr) q.emplace_back(c);
      out.emplace_back(UPoly(std::move(q)).monic(), mult);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate factorization of g(x, y), monic in x, with g(x, 0) square-free of
// full degree: factor g(x, 0), lift the factors y-adically, recombine.

using Series = std::vector<UPoly>;  // index = power of y

Series series_of(const MultiPoly& g, int precision) {
  Series s(precision);
  for (const auto& [e, c] : g.terms()) {
    if (e[1] >= precision) continue;
    std::vector<Scalar> v(e[0] + 1, Scalar(0));
    v[e[0]] = c;
    s[e[1]] += UPoly(std::move(v));
  }
  return s;
}

Series series_mul(const Series& a, const Series& b, int precision) {
  Series r(precision);
  for (int i = 0; i < precision && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < precision && j < static_cast<int>(b.size()); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

MultiPoly series_to_poly(const Series& s) {
  MultiPoly p(3);
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    for (int i = 0; i <= s[j].degree(); ++i) p.add_term({i, j, 0}, s[j][i]);
  }
  return p;
}

std::vector<MultiPoly> factor_bivariate_monic(const MultiPoly& g, std::uint64_t seed) {
  const int precision = g.degree_in(1).value_or(0) + 1;
  Series gs = series_of(g, precision);
  std::vector<UPoly> base;
  for (auto& [f, m] : factor_univariate_q(gs[0], seed)) base.push_back(f);
  if (base.size() <= 1) return {g};

  const std::size_t r = base.size();
  std::vector<UPoly> bez(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPoly others = UPoly::constant(1);
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others = others * base[j];
    }
    // inverse of others modulo base[i]
    bez[i] = ext_gcd(others, base[i]).s;
  }

  std::vector<Series> lifted(r, Series(precision));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = base[i];
  for (int j = 1; j < precision; ++j) {
    Series prod(precision);
    prod[0] = UPoly::constant(1);
    for (const auto& f : lifted) prod = series_mul(prod, f, j + 1);
    UPoly err = gs[j] - prod[j];
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i][j] = rem(err * bez[i], base[i]);
  }

  std::vector<MultiPoly> found;
  MultiPoly rest = g;
  int s = 1;
  while (2 * s <= static_cast<int>(lifted.size())) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    do {
      Series cand(precision);
      cand[0] = UPoly::constant(1);
      for (int i : idx) cand = series_mul(cand, lifted[i], precision);
      MultiPoly c = series_to_poly(cand);
      if (auto q = divide_exact(rest, c)) {
        found.push_back(c);
        rest = *q;
        for (int i = s - 1; i >= 0; --i) lifted.erase(lifted.begin() + idx[i]);
        hit = true;
        break;
      }
    } while (next_combination(idx, static_cast<int>(lifted.size())));
    if (!hit) ++s;
  }
  if (rest.degree_in(0).value_or(0) > 0) found.push_back(rest);
  return found;
}

using FactorList = std::vector<std::pair<MultiPoly, int>>;

/// Ternary form without monomial factors.
FactorList factor_ternary(const MultiPoly& f, const Config& config) {
  const int n = *f.degree();
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Mat3 m = attempt == 0 ? identity3() : pk::random_unimodular(rng, 1 + attempt / 8);
    MultiPoly g = linear_change(f, m);
    const Scalar lead = g.coeff({n, 0, 0});
    if (sgn(lead) == 0) continue;
    MultiPoly affine = g.substitute(2, 1) * (Scalar(1) / lead);

    bool good = true;
    std::vector<std::pair<MultiPoly, int>> parts;
    for (auto [part, mult] : squarefree_in(affine, 0)) {
      const int t = *part.degree_in(0);
      part *= Scalar(1) / part.coeff({t, 0, 0});
      UPoly at_zero = detail::to_upoly(part.substitute(1, 0), 0);
      if (at_zero.degree() != t || gcd(at_zero, at_zero.derivative()).degree() > 0) {
        good = false;
        break;
      }
      parts.emplace_back(std::move(part), mult);
    }
    if (!good) continue;

    const Mat3 inv = *inverse3(m);
    FactorList out;
    for (const auto& [part, mult] : parts) {
      for (const auto& h : factor_bivariate_monic(part, config.seed)) {
        MultiPoly form = homogenize_z(h, *h.degree_in(0));
        out.emplace_back(canonicalize(linear_change(form, inv)), mult);
      }
    }
    return out;
  }
  throw Error(ErrorKind::Precondition, "factor: no admissible coordinate change found");
}

FactorList factor_binary_form(const MultiPoly& f, const Config& config) {
  FactorList out;
  const int n = *f.degree();
  UPoly affine = detail::to_upoly(f.substitute(1, 1).with_arity(2), 0);
  const int v_power = n - affine.degree();
  if (v_power > 0) out.emplace_back(MultiPoly::variable(2, 1), v_power);
  for (const auto& [q, mult] : factor_univariate_q(affine, config.seed)) {
    MultiPoly h(2);
    for (int i = 0; i <= q.degree(); ++i) h.add_term({i, q.degree() - i, 0}, q[i]);
    out.emplace_back(canonicalize(h), mult);
  }
  return out;
}

}  // namespace
}  // namespace detail

Factorization factor(const MultiPoly& p, const Config& config) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "factor: zero polynomial");
  const int n = *p.degree();
  if (n > config.degree_bound) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "factor: degree " + std::to_string(n) + " exceeds bound " +
                    std::to_string(config.degree_bound));
  }
  Factorization out;
  detail::FactorList list;
  if (!p.is_homogeneous()) {
    if (p.arity() != 2) {
      throw Error(ErrorKind::NotHomogeneous, "factor: ternary input must be homogeneous");
    }
    // Factor the homogenization and drop the homogenizing variable.
    MultiPoly h(3);
    for (const auto& [e, c] : p.terms()) h.add_term({e[0], e[1], n - e[0] - e[1]}, c);
    Factorization hf = factor(h, config);
    for (const auto& [f, m] : hf.factors) {
      MultiPoly a = f.poly().substitute(2, 1);
      if (a.is_constant()) continue;
      list.emplace_back(canonicalize(a.with_arity(2)), m);
    }
  } else if (n > 0) {
    // Pull out monomial content first.
    Exponents low{n, n, n};
    for (const auto& [e, c] : p.terms()) {
      for (int i = 0; i < 3; ++i) low[i] = std::min(low[i], e[i]);
    }
    MultiPoly rest = p;
    for (int i = 0; i < p.arity(); ++i) {
      if (low[i] == 0) continue;
      list.emplace_back(MultiPoly::variable(p.arity(), i), low[i]);
      Exponents e{0, 0, 0};
      e[i] = low[i];
      rest = exact_quotient(rest, MultiPoly::monomial(p.arity(), e));
    }
    if (*rest.degree() > 0) {
      auto more = p.arity() == 3 ? detail::factor_ternary(rest, config)
                                 : detail::factor_binary_form(rest, config);
      list.insert(list.end(), more.begin(), more.end());
    }
  }

  // Merge equal factors and fix the unit from leading coefficients.
  std::map<CanonicalForm, int> merged;
  for (auto& [f, m] : list) merged[CanonicalForm(f)] += m;
  Scalar lead = 1;
  for (const auto& [f, m] : merged) {
    for (int k = 0; k < m; ++k) lead *= f.poly().leading_coeff();
    out.factors.emplace_back(f, m);
  }
  out.unit = p.leading_coeff() / lead;
  return out;
}

}  // namespace pk
