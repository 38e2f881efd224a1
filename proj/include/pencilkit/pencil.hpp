#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pencilkit/config.hpp"
#include "pencilkit/divisor.hpp"
#include "pencilkit/factor.hpp"
#include "pencilkit/linalg.hpp"
#include "pencilkit/poly.hpp"

namespace pk {

/// [l:m] with coprime integer entries, first nonzero entry positive.
struct ParameterPoint {
  Integer lambda;
  Integer mu;

  static ParameterPoint from(const Scalar& lambda, const Scalar& mu);
  std::string to_string() const;
  friend bool operator==(const ParameterPoint& a, const ParameterPoint& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
  friend bool operator<(const ParameterPoint& a, const ParameterPoint& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.mu < b.mu;
  }
};

/// Rational point of the plane, normalized like ParameterPoint.
struct PlanePoint {
  std::array<Integer, 3> coords;

  static PlanePoint from(const std::array<Scalar, 3>& p);
  std::string to_string() const;
  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.coords == b.coords; }
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) { return a.coords < b.coords; }
};

struct BasePoints {
  std::vector<std::pair<PlanePoint, int>> points;  // rational points, multiplicities
  int rational_total = 0;
  int residual = 0;  // intersection multiplicity at non-rational points
  int total = 0;     // always k^2
};

/// A member whose curve is singular.
///
/// Rational parameters carry the factored member. An irrational parameter is
/// reported through its Galois orbit: `minimal_polynomial` is the
/// Q-irreducible binary form q with q(l, m) = 0, and the flags and
/// contribution describe the norm form q(B, -A), the product of the
/// conjugate members.
struct SpecialMember {
  std::optional<ParameterPoint> parameter;
  MultiPoly minimal_polynomial{2};
  std::optional<Factorization> factorization;
  bool is_reduced = true;
  bool is_irreducible = true;
  PlaneDivisor ramification_contribution;
  /// False when the norm form of an orbit exceeds the degree bound.
  bool contribution_known = true;

  bool resolved() const { return parameter.has_value(); }
};

struct Elementary {
  PlanePoint base_point;
};

/// linear_change(form, matrix) takes the pencil onto [x^h y^(k-h) : z^k].
struct Binomial {
  int h = 0;
  int k = 0;
  Mat3 matrix{};
};

struct OtherShape {
  std::string reason;
};

using PencilClass = std::variant<Elementary, Binomial, OtherShape>;

std::string describe(const PencilClass& c);

struct LineAudit {
  std::array<MultiPoly, 3> line{MultiPoly(2), MultiPoly(2), MultiPoly(2)};
  MultiPoly restricted_a{2};
  MultiPoly restricted_b{2};
  MultiPoly wronskian{2};
  int ram_degree = 0;
  int on_rpi_degree = 0;
  int t = 0;
  /// False when a tangency is not simple or meets R_pi; t is then unreliable.
  bool conclusive = false;
  /// 2 == 2k - deg R_pi - t (meaningful only when conclusive).
  bool identity_holds = false;
};

namespace detail {
struct PencilCache;
}

/// Pencil spanned by two coprime, independent ternary forms of degree k.
/// Derived data is computed on first use and cached; copies share the cache.
class Pencil {
 public:
  /// Throws DegreeMismatch, NotHomogeneous, FixedComponent or Proportional.
  Pencil(const MultiPoly& a, const MultiPoly& b, const Config& config = {});

  const MultiPoly& a() const { return a_; }
  const MultiPoly& b() const { return b_; }
  int k() const { return k_; }
  const Config& config() const { return config_; }

  /// l*A + m*B.
  MultiPoly member_form(const Scalar& lambda, const Scalar& mu) const;
  MultiPoly member_form(const ParameterPoint& p) const;
  /// Divisor of l*A + m*B.
  PlaneDivisor element(const ParameterPoint& p) const;

  const BasePoints& base_points_rational() const;
  const std::vector<SpecialMember>& special_members() const;
  /// Sum of the special members' contributions.
  const PlaneDivisor& ramification_divisor_pi() const;
  /// Divisor of gcd(minors2x3(A, B)); a cross-check only.
  const PlaneDivisor& minor_gcd_divisor() const;
  /// Empty unless the cross-check disagrees with the member-wise R_pi.
  const std::vector<std::string>& warnings() const;
  int e_invariant() const;
  PencilClass classify_shape() const;
  /// Checks members at three fixed non-special parameters for
  /// irreducibility over Q.
  bool generic_member_irreducible() const;

  /// Audit along the line (x, y, z) = (l0(u,v), l1(u,v), l2(u,v)).
  LineAudit line_audit(const std::array<MultiPoly, 3>& line) const;
  /// Audits seeded random lines until one is conclusive.
  LineAudit line_audit() const;

 private:
  MultiPoly a_;
  MultiPoly b_;
  int k_ = 0;
  Config config_;
  std::shared_ptr<detail::PencilCache> cache_;
};

/// Where an irreducible ternary form sits relative to a pencil.
///
/// `orbit` is the lowest-degree binary form q with C | q(A, B). Degree 1
/// means C lies in the member `parameter`; degree s > 1 means C collects
/// components of s conjugate members with irrational parameters.
struct PencilMembership {
  std::optional<ParameterPoint> parameter;
  std::optional<MultiPoly> orbit;

  bool member() const { return orbit.has_value(); }
};

PencilMembership lies_in_pencil(const CanonicalForm& c, const Pencil& pencil);

/// Entries of d whose form lies in some member (or conjugate orbit).
PlaneDivisor restrict_to_pencil(const PlaneDivisor& d, const Pencil& pencil);

}  // namespace pk
