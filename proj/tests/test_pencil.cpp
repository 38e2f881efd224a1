#include <doctest.h>

#include "helpers.hpp"
#include "pencilkit/constructions.hpp"
#include "pencilkit/errors.hpp"

using namespace pk;
using th::CF;
using th::divisor;
using th::P;
using th::pencil;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Precondition;
}

std::string base_string(const Pencil& p) {
  std::string out;
  for (const auto& [pt, m] : p.base_points_rational().points) out += pt.to_string() + "x" + std::to_string(m) + " ";
  return out;
}

}  // namespace

TEST_CASE("pencil validation") {
  CHECK(pencil("x", "y").k() == 1);
  CHECK(pencil("x*y", "z^2").k() == 2);
  CHECK(kind_of([] { pencil("x^2", "x*y"); }) == ErrorKind::FixedComponent);
  CHECK(kind_of([] { pencil("x*y", "2*x*y"); }) == ErrorKind::Proportional);
  CHECK(kind_of([] { pencil("x", "y^2"); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([] { Pencil(P("x + y^2"), P("z^2")); }) == ErrorKind::NotHomogeneous);
  CHECK(kind_of([] { Pencil(MultiPoly(3), P("z")); }) == ErrorKind::ZeroInput);
  CHECK(kind_of([] { Pencil(th::L("u"), th::L("v")); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("elements") {
  const Pencil p = pencil("x*y", "z^2");
  CHECK(p.element({1, 0}) == divisor({{"x", 1}, {"y", 1}}));
  CHECK(p.element({0, 1}) == divisor({{"z", 2}}));
  CHECK(p.element({1, 1}) == divisor({{"x*y + z^2", 1}}));
  CHECK(ParameterPoint::from(-2, 4).to_string() == "[1:-2]");
  CHECK(ParameterPoint::from(0, Scalar(-3, 2)).to_string() == "[0:1]");
}

TEST_CASE("base points") {
  const Pencil lines = pencil("x", "y");
  CHECK(base_string(lines) == "[0:0:1]x1 ");
  const Pencil bin = pencil("x*y", "z^2");
  CHECK(base_string(bin) == "[0:1:0]x2 [1:0:0]x2 ");
  CHECK(bin.base_points_rational().rational_total == 4);
  CHECK(bin.base_points_rational().total == 4);
  const Pencil conic = pencil("x^2 + y*z", "y^2");
  CHECK(base_string(conic) == "[0:0:1]x4 ");
  // four points, two of them irrational: x^2 - 2y^2 = 0 = z
  const Pencil mixed = pencil("x^2 - 2*y^2", "z*(x - y)");
  const BasePoints& bp = mixed.base_points_rational();
  CHECK(bp.rational_total == 2);
  CHECK(bp.residual == 2);
}

TEST_CASE("special members") {
  const Pencil bin = pencil("x*y", "z^2");
  const auto& sm = bin.special_members();
  REQUIRE(sm.size() == 2);
  CHECK(sm[0].parameter->to_string() == "[0:1]");
  CHECK_FALSE(sm[0].is_reduced);
  CHECK(sm[0].ramification_contribution == divisor({{"z", 1}}));
  CHECK(sm[1].parameter->to_string() == "[1:0]");
  CHECK(sm[1].is_reduced);
  CHECK_FALSE(sm[1].is_irreducible);

  const Pencil conic_pencil = pencil("x^2 + y*z", "y^2");
  const auto& conic = conic_pencil.special_members();
  REQUIRE(conic.size() == 1);
  CHECK(conic[0].parameter->to_string() == "[0:1]");
  CHECK(conic[0].factorization->factors.front().first == CF("y"));
  CHECK(conic[0].factorization->factors.front().second == 2);

  CHECK(pencil("x", "y").special_members().empty());
}

TEST_CASE("irrational special members are reported as orbits") {
  // discriminant l*(2*m^2 - l^2/4) has the irrational pair 8*m^2 = l^2
  const Pencil p = pencil("x*y + z^2", "x^2 + 2*y^2");
  bool saw_orbit = false;
  for (const auto& s : p.special_members()) {
    if (!s.resolved()) {
      saw_orbit = true;
      CHECK(s.minimal_polynomial.degree() >= 2);
      CHECK(s.contribution_known);
    }
  }
  CHECK(saw_orbit);
  CHECK(p.warnings().empty());
  CHECK(p.ramification_divisor_pi() == p.minor_gcd_divisor());
}

TEST_CASE("ramification divisor of the projection and e") {
  CHECK(pencil("x", "y").ramification_divisor_pi().empty());
  CHECK(pencil("x", "y").e_invariant() == 2);
  const Pencil bin = pencil("x*y", "z^2");
  CHECK(bin.ramification_divisor_pi() == divisor({{"z", 1}}));
  CHECK(bin.e_invariant() == 3);
  const Pencil conic = pencil("x^2 + y*z", "y^2");
  CHECK(conic.ramification_divisor_pi() == divisor({{"y", 1}}));
  CHECK(conic.e_invariant() == 3);
  const Pencil cusp = pencil("x^2*y", "z^3");
  CHECK(cusp.ramification_divisor_pi() == divisor({{"x", 1}, {"z", 2}}));
  CHECK(cusp.e_invariant() == 3);
}

TEST_CASE("member-wise R_pi matches the minor-gcd divisor") {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x*y", "z^2"},         {"x^2*y", "z^3"},           {"x^2 + y*z", "y^2"}, {"x", "y"},
      {"x*y^2", "z^3"},       {"x*(x + y)", "(z + x)^2"}, {"x^2", "y*z"},       {"x*y", "z^2 + x^2"},
      {"x^2 - y^2", "z^2"},   {"x*y*(x - y)", "z^3"},     {"x^3", "y*z^2"},     {"x*y + y*z", "x*z"},
  };
  for (const auto& [a, b] : cases) {
    const Pencil p = pencil(a, b);
    CHECK_MESSAGE(p.ramification_divisor_pi() == p.minor_gcd_divisor(), a << " : " << b);
    CHECK(p.warnings().empty());
  }
}

TEST_CASE("e >= 2 on a sample of pencils") {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x^2 + y^2", "z^2 + x*y"}, {"x^3 + y^3", "x*y*z"}, {"x*z", "y^2 + z^2"}, {"x^2*z", "y^3 + z^3"}};
  for (const auto& [a, b] : cases) CHECK(pencil(a, b).e_invariant() >= 2);
}

TEST_CASE("shape classification") {
  const PencilClass lines = pencil("x", "y").classify_shape();
  REQUIRE(std::holds_alternative<Elementary>(lines));
  CHECK(std::get<Elementary>(lines).base_point.to_string() == "[0:0:1]");
  CHECK(describe(lines) == "Elementary base_point=[0:0:1]");

  const PencilClass bin = pencil("x*y", "z^2").classify_shape();
  REQUIRE(std::holds_alternative<Binomial>(bin));
  CHECK(std::get<Binomial>(bin).h == 1);
  CHECK(std::get<Binomial>(bin).k == 2);
  CHECK(std::get<Binomial>(bin).matrix == identity3());
  CHECK(describe(bin) == "Binomial h=1 k=2");

  const Pencil moved = pencil("x*(x + y)", "(z + x)^2");
  const PencilClass c = moved.classify_shape();
  REQUIRE(std::holds_alternative<Binomial>(c));
  const Binomial& b = std::get<Binomial>(c);
  CHECK(b.matrix != identity3());
  // the matrix carries the pencil to the normal form
  const MultiPoly a2 = linear_change(moved.a(), b.matrix);
  const MultiPoly b2 = linear_change(moved.b(), b.matrix);
  const Pencil normal = pencil("x*y", "z^2");
  CHECK(lies_in_pencil(CanonicalForm(a2), normal).member());
  CHECK(lies_in_pencil(CanonicalForm(b2), normal).member());

  const PencilClass cusp = pencil("x^2*y", "z^3").classify_shape();
  REQUIRE(std::holds_alternative<Binomial>(cusp));
  CHECK(std::get<Binomial>(cusp).h == 2);

  CHECK(std::holds_alternative<OtherShape>(pencil("x^2 + y*z", "y^2").classify_shape()));
  CHECK(std::holds_alternative<OtherShape>(pencil("x^2 + y^2", "z^2 + x*y").classify_shape()));
}

TEST_CASE("generic member irreducibility") {
  CHECK(pencil("x*y", "z^2").generic_member_irreducible());
  CHECK_FALSE(pencil("x^2", "y^2").generic_member_irreducible());
  CHECK(pencil("x", "y").generic_member_irreducible());
}

TEST_CASE("e = 2 exactly for irreducible elementary pencils") {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x", "y"}, {"x + z", "y - z"}, {"x*y", "z^2"}, {"x^2*y", "z^3"}, {"x^2 + y*z", "y^2"}, {"x*y + z^2", "x^2"}};
  for (const auto& [a, b] : cases) {
    const Pencil p = pencil(a, b);
    REQUIRE(p.generic_member_irreducible());
    CHECK((p.e_invariant() == 2) == std::holds_alternative<Elementary>(p.classify_shape()));
  }
}

TEST_CASE("line audit") {
  const Pencil lines = pencil("x", "y");
  const LineAudit a = lines.line_audit({th::L("u"), th::L("u + v"), th::L("v")});
  CHECK(a.t == 0);
  CHECK(a.conclusive);
  CHECK(a.identity_holds);

  const Pencil bin = pencil("x*y", "z^2");
  const LineAudit b = bin.line_audit({th::L("u"), th::L("u + v"), th::L("v")});
  CHECK(b.ram_degree == 2);
  CHECK(b.t == 1);
  CHECK(b.identity_holds);

  const LineAudit c = pencil("x^2 + y*z", "y^2").line_audit();
  CHECK(c.conclusive);
  CHECK(c.t == 1);
  CHECK(c.identity_holds);
}

TEST_CASE("line audit rejects bad lines") {
  const Pencil bin = pencil("x*y", "z^2");
  auto bad = [&](const char* a, const char* b, const char* c) {
    try {
      bin.line_audit({th::L(a), th::L(b), th::L(c)});
    } catch (const Error& e) {
      return e.kind() == ErrorKind::BadLine;
    }
    return false;
  };
  CHECK(bad("u", "u", "u"));          // a point
  CHECK(bad("u", "v", "0"));          // the line z = 0 lies in R_pi
  CHECK(bad("u", "0", "v"));          // the line y = 0 lies in a member
  CHECK(bad("u^2", "v^2", "u*v"));    // not linear
  CHECK(bad("u", "v", "v"));          // passes through the base point [1:0:0]
  CHECK_FALSE(bad("u", "v", "u + v"));
}

TEST_CASE("e = 2 + t along generic lines") {
  const std::vector<std::array<const char*, 3>> lines{
      {"u", "u + v", "v"}, {"u + v", "u - v", "2*u + 3*v"}, {"2*u - v", "u + 3*v", "u"},
      {"u - 2*v", "3*u + v", "u + v"}, {"u", "3*u + v", "2*u - 5*v"}};
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"x*y", "z^2"}, {"x^2*y", "z^3"}, {"x^2 + y*z", "y^2"}, {"x", "y"}}) {
    const Pencil p = pencil(a, b);
    for (const auto& l : lines) {
      const LineAudit audit = p.line_audit({th::L(l[0]), th::L(l[1]), th::L(l[2])});
      CHECK(audit.conclusive);
      CHECK(p.e_invariant() == 2 + audit.t);
    }
  }
}
