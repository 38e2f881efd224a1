#include "pencilkit/pencil.hpp"

#include <mutex>
#include <numeric>
#include <random>

#include "pencilkit/constructions.hpp"
#include "pencilkit/detail/upoly.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/resultant.hpp"

namespace pk {

namespace detail {

struct PencilCache {
  std::once_flag base_once;
  BasePoints base;

  std::once_flag special_once;
  std::vector<SpecialMember> special;
  std::vector<MultiPoly> unknown_orbits;
  PlaneDivisor minor_divisor;
  PlaneDivisor r_pi;
  std::vector<std::string> warnings;
};

}  // namespace detail

namespace {

template <std::size_t N>
std::array<Integer, N> primitive_integers(const std::array<Scalar, N>& v) {
  Integer den = 1;
  bool any = false;
  for (const auto& c : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    any = any || sgn(c) != 0;
  }
  if (!any) throw Error(ErrorKind::Precondition, "projective point with all coordinates zero");
  std::array<Integer, N> out;
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const Scalar scaled = v[i] * den;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  int sign = 0;
  for (const auto& c : out) {
    if (sgn(c) != 0) {
      sign = sgn(c);
      break;
    }
  }
  for (auto& c : out) {
    c /= g;
    if (sign < 0) c = -c;
  }
  return out;
}

std::array<Scalar, 3> linear_coefficients(const MultiPoly& l) {
  std::array<Scalar, 3> out{0, 0, 0};
  for (const auto& [e, c] : l.terms()) {
    if (total_degree(e) != 1) throw Error(ErrorKind::Precondition, "expected a linear form");
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 1) out[i] = c;
    }
  }
  return out;
}

MultiPoly binary_from_coefficients(const std::vector<Scalar>& c) {
  // c[i] multiplies u^i v^(s-i)
  const int s = static_cast<int>(c.size()) - 1;
  MultiPoly q(2);
  for (int i = 0; i <= s; ++i) q.add_term({i, s - i, 0}, c[i]);
  return q;
}

bool is_singular_curve(const MultiPoly& f, const Config& config) {
  const std::array<MultiPoly, 3> d{f.partial(0), f.partial(1), f.partial(2)};
  for (const auto& p : d) {
    if (p.is_zero()) return true;
  }
  return sgn(macaulay_resultant3(d[0], d[1], d[2], config)) == 0;
}

/// Root [l:m] of a linear binary form alpha*u + beta*v.
ParameterPoint root_of_linear(const MultiPoly& q) {
  return ParameterPoint::from(q.coeff({0, 1, 0}), -q.coeff({1, 0, 0}));
}

}  // namespace

ParameterPoint ParameterPoint::from(const Scalar& lambda, const Scalar& mu) {
  const auto v = primitive_integers<2>({lambda, mu});
  return {v[0], v[1]};
}

std::string ParameterPoint::to_string() const {
  return "[" + lambda.get_str() + ":" + mu.get_str() + "]";
}

PlanePoint PlanePoint::from(const std::array<Scalar, 3>& p) { return {primitive_integers<3>(p)}; }

std::string PlanePoint::to_string() const {
  return "[" + coords[0].get_str() + ":" + coords[1].get_str() + ":" + coords[2].get_str() + "]";
}

std::string describe(const PencilClass& c) {
  if (const auto* e = std::get_if<Elementary>(&c)) {
    return "Elementary base_point=" + e->base_point.to_string();
  }
  if (const auto* b = std::get_if<Binomial>(&c)) {
    return "Binomial h=" + std::to_string(b->h) + " k=" + std::to_string(b->k);
  }
  return "Other: " + std::get<OtherShape>(c).reason;
}

Pencil::Pencil(const MultiPoly& a, const MultiPoly& b, const Config& config)
    : a_(a), b_(b), config_(config), cache_(std::make_shared<detail::PencilCache>()) {
  if (a.arity() != 3 || b.arity() != 3) throw Error(ErrorKind::ArityMismatch, "pencil needs ternary forms");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "pencil: zero form");
  if (!a.is_homogeneous() || !b.is_homogeneous()) {
    throw Error(ErrorKind::NotHomogeneous, "pencil: forms must be homogeneous");
  }
  if (*a.degree() != *b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "pencil: A has degree " + std::to_string(*a.degree()) +
                                               ", B has degree " + std::to_string(*b.degree()));
  }
  k_ = *a.degree();
  if (k_ < 1) throw Error(ErrorKind::DegreeMismatch, "pencil: degree must be at least 1");
  if (k_ > config.degree_bound) {
    throw Error(ErrorKind::DegreeBoundExceeded, "pencil: degree exceeds bound");
  }
  if (a * b.leading_coeff() == b * a.leading_coeff()) {
    throw Error(ErrorKind::Proportional, "pencil: A and B are proportional");
  }
  const CanonicalForm g = gcd(a, b);
  if (g.degree() > 0) {
    throw Error(ErrorKind::FixedComponent, "pencil: fixed component " + g.to_string());
  }
}

MultiPoly Pencil::member_form(const Scalar& lambda, const Scalar& mu) const {
  return a_ * lambda + b_ * mu;
}

MultiPoly Pencil::member_form(const ParameterPoint& p) const {
  return member_form(Scalar(p.lambda), Scalar(p.mu));
}

PlaneDivisor Pencil::element(const ParameterPoint& p) const {
  return plane_divisor_of(member_form(p), config_);
}

const BasePoints& Pencil::base_points_rational() const {
  std::call_once(cache_->base_once, [this] {
    BasePoints out;
    out.total = k_ * k_;
    std::mt19937_64 rng(config_.seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Mat3 m = attempt == 0 ? identity3() : random_unimodular(rng, 1 + attempt / 8);
      const MultiPoly a = linear_change(a_, m);
      const MultiPoly b = linear_change(b_, m);
      // [0:0:1] must miss the base locus.
      if (sgn(a.coeff({0, 0, k_})) == 0 && sgn(b.coeff({0, 0, k_})) == 0) continue;
      const MultiPoly res = resultant(a, b, 2);
      if (res.is_zero() || res.degree() != out.total) continue;

      bool generic = true;
      std::vector<std::pair<PlanePoint, int>> points;
      for (const auto& [f, mult] : factor(res, config_).factors) {
        if (f.degree() != 1) continue;
        // f = alpha*x + beta*y vanishes at (beta, -alpha).
        const Scalar px = f.poly().coeff({0, 1, 0});
        const Scalar py = -f.poly().coeff({1, 0, 0});
        const auto ra = detail::to_upoly(a.substitute(0, px).substitute(1, py), 2);
        const auto rb = detail::to_upoly(b.substitute(0, px).substitute(1, py), 2);
        detail::UPoly g = detail::gcd(ra, rb);
        if (g.degree() > 1) g = detail::divrem(g, detail::gcd(g, g.derivative())).first;
        if (g.degree() != 1) {
          generic = false;
          break;
        }
        const Scalar pz = -g[0] / g[1];
        std::array<Scalar, 3> orig{0, 0, 0};
        const std::array<Scalar, 3> moved{px, py, pz};
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) orig[i] += m[i][j] * moved[j];
        }
        points.emplace_back(PlanePoint::from(orig), mult);
      }
      if (!generic) continue;
      std::sort(points.begin(), points.end());
      out.points = std::move(points);
      for (const auto& [p, mult] : out.points) out.rational_total += mult;
      out.residual = out.total - out.rational_total;
      cache_->base = std::move(out);
      return;
    }
    throw Error(ErrorKind::Precondition, "base points: no generic projection found");
  });
  return cache_->base;
}

const std::vector<SpecialMember>& Pencil::special_members() const {
  std::call_once(cache_->special_once, [this] {
    auto& c = *cache_;
    std::vector<SpecialMember> resolved;
    std::vector<SpecialMember> orbits;
    if (k_ >= 2) {
      LinearFormTriple triple;
      triple.degrees = {k_ - 1, k_ - 1, k_ - 1};
      for (int i = 0; i < 3; ++i) {
        triple.at_l[i] = a_.partial(i);
        triple.at_m[i] = b_.partial(i);
      }
      const MultiPoly trailing = macaulay_trailing_form(triple);
      if (!trailing.is_constant()) {
        for (const auto& [q, mult] : factor(trailing, config_).factors) {
          SpecialMember s;
          s.minimal_polynomial = q.poly();
          if (q.degree() == 1) {
            s.parameter = root_of_linear(q.poly());
            const MultiPoly member = member_form(*s.parameter);
            if (!is_singular_curve(member, config_)) continue;
            s.factorization = factor(member, config_);
            PlaneDivisor d;
            for (const auto& [f, m] : s.factorization->factors) d.add(f, m);
            s.ramification_contribution = ramification_part(d);
            s.is_reduced = s.ramification_contribution.empty();
            s.is_irreducible = d.size() == 1;
            resolved.push_back(std::move(s));
            continue;
          }
          if (q.degree() * k_ > config_.degree_bound) {
            s.contribution_known = false;
            s.is_reduced = false;
            s.is_irreducible = false;
            c.unknown_orbits.push_back(q.poly());
            orbits.push_back(std::move(s));
            continue;
          }
          const std::array<MultiPoly, 2> images{b_, -a_};
          const PlaneDivisor norm = plane_divisor_of(q.poly().compose(images), config_);
          s.ramification_contribution = ramification_part(norm);
          s.is_reduced = s.ramification_contribution.empty();
          s.is_irreducible = norm.size() == 1;
          orbits.push_back(std::move(s));
        }
      }
    }
    std::sort(resolved.begin(), resolved.end(),
              [](const SpecialMember& x, const SpecialMember& y) { return *x.parameter < *y.parameter; });
    c.special = std::move(resolved);
    for (auto& s : orbits) c.special.push_back(std::move(s));

    for (const auto& s : c.special) c.r_pi += s.ramification_contribution;

    const auto minors = minors2x3(a_, b_);
    const MultiPoly g = gcd_poly(minors[0], gcd_poly(minors[1], minors[2]));
    if (!g.is_zero() && !g.is_constant()) c.minor_divisor = plane_divisor_of(g, config_);
    if (c.unknown_orbits.empty() && !(c.minor_divisor == c.r_pi)) {
      c.warnings.push_back("minor-gcd divisor " + c.minor_divisor.to_string() +
                           " differs from member-wise R_pi " + c.r_pi.to_string());
    }
  });
  return cache_->special;
}

const PlaneDivisor& Pencil::ramification_divisor_pi() const {
  special_members();
  if (!cache_->unknown_orbits.empty()) {
    std::string list;
    for (const auto& q : cache_->unknown_orbits) list += (list.empty() ? "" : ", ") + q.to_string();
    throw Error(ErrorKind::UnresolvedAlgebraicMember,
                "special members with irrational parameters exceed the degree bound: " + list);
  }
  return cache_->r_pi;
}

const PlaneDivisor& Pencil::minor_gcd_divisor() const {
  special_members();
  return cache_->minor_divisor;
}

const std::vector<std::string>& Pencil::warnings() const {
  special_members();
  return cache_->warnings;
}

int Pencil::e_invariant() const { return 2 * k_ - ramification_divisor_pi().degree(); }

PencilClass Pencil::classify_shape() const {
  if (k_ == 1) {
    const auto p = linear_coefficients(a_);
    const auto q = linear_coefficients(b_);
    return Elementary{PlanePoint::from({p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                                        p[0] * q[1] - p[1] * q[0]})};
  }
  const auto& members = special_members();
  const SpecialMember* two_lines = nullptr;
  const SpecialMember* k_line = nullptr;
  int two_line_count = 0;
  bool unresolved = false;
  for (const auto& s : members) {
    if (!s.resolved()) {
      unresolved = true;
      continue;
    }
    const auto& f = s.factorization->factors;
    if (f.size() == 2 && f[0].first.degree() == 1 && f[1].first.degree() == 1) {
      ++two_line_count;
      two_lines = &s;
    } else if (f.size() == 1 && f[0].first.degree() == 1 && f[0].second == k_ && !k_line) {
      k_line = &s;
    }
  }
  const std::string suffix = unresolved ? " (some special members have irrational parameters)" : "";
  if (two_line_count != 1) {
    return OtherShape{two_line_count == 0 ? "no member consisting of two distinct lines" + suffix
                                          : "several members consisting of two lines"};
  }
  if (!k_line) return OtherShape{"no member that is a single line of multiplicity k" + suffix};

  auto l1 = two_lines->factorization->factors[0];
  auto l2 = two_lines->factorization->factors[1];
  if (GrlexGreater{}(l2.first.poly().leading_term().first, l1.first.poly().leading_term().first)) {
    std::swap(l1, l2);
  }
  const int h = l1.second;
  if (std::gcd(h, k_) != 1) {
    return OtherShape{"line multiplicities " + std::to_string(h) + " and " + std::to_string(k_ - h) +
                      " are not coprime to k"};
  }
  const Mat3 lines{linear_coefficients(l1.first.poly()), linear_coefficients(l2.first.poly()),
                   linear_coefficients(k_line->factorization->factors[0].first.poly())};
  const auto n = inverse3(lines);
  if (!n) return OtherShape{"the k-fold line passes through the intersection of the two lines"};

  const Exponents binom{h, k_ - h, 0};
  const Exponents power{0, 0, k_};
  for (const MultiPoly* f : {&a_, &b_}) {
    for (const auto& [e, c] : linear_change(*f, *n).terms()) {
      if (e != binom && e != power) return OtherShape{"normalized pencil is not binomial"};
    }
  }
  return Binomial{h, k_, *n};
}

bool Pencil::generic_member_irreducible() const {
  static const std::array<std::pair<int, int>, 8> candidates{
      {{1, -1}, {1, -4}, {4, -1}, {2, -9}, {9, -2}, {3, 5}, {5, 3}, {7, -11}}};
  const auto& members = special_members();
  int checked = 0;
  for (const auto& [l, m] : candidates) {
    if (checked == 3) break;
    bool special = false;
    for (const auto& s : members) {
      const std::array<Scalar, 2> at{l, m};
      if (sgn(s.minimal_polynomial.evaluate(at)) == 0) special = true;
    }
    if (special) continue;
    ++checked;
    if (!factor(member_form(l, m), config_).is_irreducible()) return false;
  }
  return true;
}

LineAudit Pencil::line_audit(const std::array<MultiPoly, 3>& line) const {
  RationalMatrix coeffs(3, std::vector<Scalar>(2));
  for (int i = 0; i < 3; ++i) {
    const MultiPoly& l = line[i];
    if (l.arity() != 2) throw Error(ErrorKind::BadLine, "line: coordinates must be forms in u, v");
    if (!l.is_zero() && (!l.is_homogeneous() || *l.degree() != 1)) {
      throw Error(ErrorKind::BadLine, "line: coordinates must be linear forms");
    }
    coeffs[i] = {l.coeff({1, 0, 0}), l.coeff({0, 1, 0})};
  }
  if (rank(coeffs) != 2) throw Error(ErrorKind::BadLine, "line: parametrization is degenerate");

  LineAudit out;
  out.line = line;
  out.restricted_a = a_.compose(line);
  out.restricted_b = b_.compose(line);
  const MultiPoly& ra = out.restricted_a;
  const MultiPoly& rb = out.restricted_b;
  if (ra.is_zero() || rb.is_zero() || ra * rb.leading_coeff() == rb * ra.leading_coeff()) {
    throw Error(ErrorKind::BadLine, "line: contained in a member of the pencil");
  }
  if (gcd(ra, rb).degree() > 0) throw Error(ErrorKind::BadLine, "line: passes through a base point");

  out.wronskian = wronskian2(ra, rb);
  out.ram_degree = *out.wronskian.degree();
  MultiPoly on_rpi = MultiPoly::constant(2, 1);
  for (const auto& [f, m] : ramification_divisor_pi().entries()) {
    on_rpi *= f.poly().compose(line).pow(m);
  }
  if (on_rpi.is_zero()) throw Error(ErrorKind::BadLine, "line: contained in R_pi");
  out.on_rpi_degree = *on_rpi.degree();
  out.t = out.ram_degree - out.on_rpi_degree;
  const auto tangency = divide_exact(out.wronskian, on_rpi);
  if (tangency) {
    const MultiPoly& t = *tangency;
    const bool squarefree = t.degree() <= 1 || gcd(t.partial(0), t.partial(1)).degree() == 0;
    out.conclusive = squarefree && gcd(t, on_rpi).degree() == 0;
  }
  out.identity_holds = 2 == 2 * k_ - ramification_divisor_pi().degree() - out.t;
  return out;
}

LineAudit Pencil::line_audit() const {
  std::mt19937_64 rng(config_.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly v = MultiPoly::variable(2, 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::array<MultiPoly, 3> line{MultiPoly(2), MultiPoly(2), MultiPoly(2)};
    for (auto& l : line) l = u * Scalar(dist(rng)) + v * Scalar(dist(rng));
    try {
      LineAudit audit = line_audit(line);
      if (audit.conclusive) return audit;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadLine) throw;
    }
  }
  throw Error(ErrorKind::Precondition, "line audit: no conclusive line found");
}

PencilMembership lies_in_pencil(const CanonicalForm& c, const Pencil& pencil) {
  const MultiPoly& cp = c.poly();
  if (cp.arity() != 3 || c.degree() < 1) {
    throw Error(ErrorKind::Precondition, "lies_in_pencil: expects a nonconstant ternary form");
  }
  const int r = c.degree();
  const int k = pencil.k();
  const MultiPoly ra = normal_form(pencil.a(), cp);
  const MultiPoly rb = normal_form(pencil.b(), cp);
  for (int s = std::max(1, (r + k - 1) / k); s <= r; ++s) {
    // columns: normal forms of A^i B^(s-i)
    std::vector<MultiPoly> columns;
    for (int i = 0; i <= s; ++i) {
      columns.push_back(normal_form(ra.pow(i) * rb.pow(s - i), cp));
    }
    std::map<Exponents, std::size_t, GrlexGreater> rows;
    for (const auto& col : columns) {
      for (const auto& [e, coef] : col.terms()) rows.emplace(e, rows.size());
    }
    RationalMatrix m(rows.size(), std::vector<Scalar>(columns.size(), Scalar(0)));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (const auto& [e, coef] : columns[j].terms()) m[rows.at(e)][j] = coef;
    }
    const auto kernel = nullspace(std::move(m));
    if (kernel.empty()) continue;
    PencilMembership out;
    out.orbit = canonicalize(binary_from_coefficients(kernel.front()));
    if (s == 1) out.parameter = ParameterPoint::from(kernel.front()[1], kernel.front()[0]);
    return out;
  }
  return {};
}

PlaneDivisor restrict_to_pencil(const PlaneDivisor& d, const Pencil& pencil) {
  PlaneDivisor out;
  for (const auto& [f, m] : d.entries()) {
    if (lies_in_pencil(f, pencil).member()) out.add(f, m);
  }
  return out;
}

}  // namespace pk
