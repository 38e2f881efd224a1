#include "pencilkit/endo.hpp"

#include "pencilkit/constructions.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/resultant.hpp"

namespace pk {

PlaneEndo::PlaneEndo(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r, const Config& config)
    : c_{p, q, r} {
  for (const auto& f : c_) {
    if (f.arity() != 3) throw Error(ErrorKind::ArityMismatch, "plane map needs ternary forms");
    if (f.is_zero()) throw Error(ErrorKind::NotAMorphism, "plane map: zero component");
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "plane map: component not homogeneous");
  }
  d_ = *p.degree();
  if (*q.degree() != d_ || *r.degree() != d_) {
    throw Error(ErrorKind::DegreeMismatch, "plane map: components have degrees " +
                                               std::to_string(d_) + ", " + std::to_string(*q.degree()) +
                                               ", " + std::to_string(*r.degree()));
  }
  if (d_ < 1) throw Error(ErrorKind::DegreeMismatch, "plane map: degree must be at least 1");
  const CanonicalForm g = gcd(p, gcd_poly(q, r));
  if (g.degree() > 0) {
    throw Error(ErrorKind::NotAMorphism, "plane map: components share the factor " + g.to_string());
  }
  if (sgn(macaulay_resultant3(p, q, r, config)) == 0) {
    throw Error(ErrorKind::NotAMorphism, "plane map: components have a common zero");
  }
}

PlaneEndo PlaneEndo::trusted(std::array<MultiPoly, 3> components) {
  PlaneEndo f;
  f.c_ = std::move(components);
  f.d_ = *f.c_[0].degree();
  return f;
}

std::string PlaneEndo::to_string() const {
  return "[" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + "]";
}

LineEndo::LineEndo(const MultiPoly& g0, const MultiPoly& g1) : g0_(g0), g1_(g1) {
  if (g0.arity() != 2 || g1.arity() != 2) throw Error(ErrorKind::ArityMismatch, "line map needs binary forms");
  if (g0.is_zero() || g1.is_zero()) throw Error(ErrorKind::ZeroInput, "line map: zero component");
  if (!g0.is_homogeneous() || !g1.is_homogeneous()) {
    throw Error(ErrorKind::NotHomogeneous, "line map: component not homogeneous");
  }
  d_ = *g0.degree();
  if (*g1.degree() != d_) throw Error(ErrorKind::DegreeMismatch, "line map: components of unequal degree");
  const CanonicalForm g = gcd(g0, g1);
  if (g.degree() > 0) throw Error(ErrorKind::NotCoprime, "line map: common factor " + g.to_string());
}

std::string LineEndo::to_string() const { return "[" + g0_.to_string() + " : " + g1_.to_string() + "]"; }

PlaneDivisor ramification_f(const PlaneEndo& f, const Config& config) {
  const MultiPoly j = jacobian_det3(f.p(), f.q(), f.r());
  if (j.is_zero()) throw Error(ErrorKind::NotAMorphism, "ramification_f: Jacobian vanishes identically");
  if (j.is_constant()) return {};
  return plane_divisor_of(j, config);
}

LineDivisor ramification_g(const LineEndo& g, const Config& config) {
  const MultiPoly w = wronskian2(g.g0(), g.g1());
  if (w.is_constant()) return {};
  return line_divisor_of(w, config);
}

PlaneDivisor pullback_plane(const PlaneEndo& f, const PlaneDivisor& d, const Config& config) {
  PlaneDivisor out;
  for (const auto& [c, m] : d.entries()) {
    out += m * plane_divisor_of(f.pull(c.poly()), config);
  }
  return out;
}

PlaneEndo compose(const PlaneEndo& g, const PlaneEndo& f) {
  return PlaneEndo::trusted({f.pull(g.p()), f.pull(g.q()), f.pull(g.r())});
}

PlaneEndo iterate(const PlaneEndo& f, int n, const Config& config) {
  if (n < 1) throw Error(ErrorKind::Precondition, "iterate: n must be at least 1");
  long long degree = 1;
  for (int i = 0; i < n; ++i) {
    degree *= f.degree();
    if (degree > config.degree_bound) {
      throw Error(ErrorKind::DegreeBoundExceeded,
                  "iterate: degree of the composite exceeds bound " + std::to_string(config.degree_bound));
    }
  }
  PlaneEndo out = f;
  for (int i = 1; i < n; ++i) out = compose(out, f);
  return out;
}

CurveInvariance curve_invariance(const PlaneEndo& f, const CanonicalForm& c, const Config& config) {
  const MultiPoly pulled = f.pull(c.poly());
  const PlaneDivisor d = plane_divisor_of(pulled, config);
  CurveInvariance out;
  out.total = d.size() == 1 && d.multiplicity(c) != 0;
  out.divisorial = out.total && d.multiplicity(c) == f.degree();
  return out;
}

bool totally_invariant_curve(const PlaneEndo& f, const CanonicalForm& c, const Config& config) {
  return curve_invariance(f, c, config).total;
}

bool totally_invariant_point(const LineEndo& g, const ParameterPoint& point) {
  const Scalar s0(point.lambda);
  const Scalar t0(point.mu);
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly v = MultiPoly::variable(2, 1);
  const MultiPoly fiber = g.g0() * t0 - g.g1() * s0;
  const MultiPoly power = (u * t0 - v * s0).pow(g.degree());
  return fiber * power.leading_coeff() == power * fiber.leading_coeff();
}

}  // namespace pk
