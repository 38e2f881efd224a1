#pragma once

#include <array>
#include <string>

#include "pencilkit/config.hpp"
#include "pencilkit/divisor.hpp"
#include "pencilkit/pencil.hpp"
#include "pencilkit/poly.hpp"

namespace pk {

/// Morphism [P:Q:R] of the projective plane of degree d.
class PlaneEndo {
 public:
  /// Validates: equal-degree homogeneous forms without a common zero.
  /// Throws DegreeMismatch, NotHomogeneous or NotAMorphism.
  PlaneEndo(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r, const Config& config = {});

  /// Skips the morphism check; for compositions of validated maps.
  static PlaneEndo trusted(std::array<MultiPoly, 3> components);

  const std::array<MultiPoly, 3>& components() const { return c_; }
  const MultiPoly& p() const { return c_[0]; }
  const MultiPoly& q() const { return c_[1]; }
  const MultiPoly& r() const { return c_[2]; }
  int degree() const { return d_; }

  /// form(P, Q, R).
  MultiPoly pull(const MultiPoly& form) const { return form.compose(c_); }

  std::string to_string() const;

 private:
  PlaneEndo() = default;
  std::array<MultiPoly, 3> c_{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  int d_ = 0;
};

/// Morphism [g0:g1] of the projective line of degree d.
class LineEndo {
 public:
  /// Throws DegreeMismatch, NotHomogeneous, ZeroInput or NotCoprime.
  LineEndo(const MultiPoly& g0, const MultiPoly& g1);

  const MultiPoly& g0() const { return g0_; }
  const MultiPoly& g1() const { return g1_; }
  int degree() const { return d_; }

  std::string to_string() const;

  friend bool operator==(const LineEndo& a, const LineEndo& b) {
    return a.g0_ == b.g0_ && a.g1_ == b.g1_;
  }

 private:
  MultiPoly g0_;
  MultiPoly g1_;
  int d_;
};

/// Divisor of the Jacobian determinant; degree 3(d - 1).
PlaneDivisor ramification_f(const PlaneEndo& f, const Config& config = {});
/// Divisor of the Wronskian; degree 2(d - 1).
LineDivisor ramification_g(const LineEndo& g, const Config& config = {});

/// Sum of multiplicity * divisor(form o f); degree d * deg(D).
PlaneDivisor pullback_plane(const PlaneEndo& f, const PlaneDivisor& d, const Config& config = {});

/// n-fold composite f o ... o f. Throws DegreeBoundExceeded when d^n is
/// above config.degree_bound.
PlaneEndo iterate(const PlaneEndo& f, int n, const Config& config = {});

/// g(f(x)), i.e. apply f first.
PlaneEndo compose(const PlaneEndo& g, const PlaneEndo& f);

struct CurveInvariance {
  bool total = false;       // f^{-1}(C) = C as sets
  bool divisorial = false;  // f^*C = d * C
};

CurveInvariance curve_invariance(const PlaneEndo& f, const CanonicalForm& c, const Config& config = {});

/// True when the support of divisor(C o f) is exactly {C}.
bool totally_invariant_curve(const PlaneEndo& f, const CanonicalForm& c, const Config& config = {});

/// True when the fiber form t0*g0 - s0*g1 is a multiple of (t0*u - s0*v)^d.
bool totally_invariant_point(const LineEndo& g, const ParameterPoint& point);

}  // namespace pk
