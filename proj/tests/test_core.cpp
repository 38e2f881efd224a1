#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pencilkit/constructions.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/factor.hpp"
#include "pencilkit/linalg.hpp"
#include "pencilkit/resultant.hpp"

using namespace pk;
using th::P;
using th::L;
using th::CF;

TEST_CASE("arithmetic") {
  CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
  CHECK(P("x*y+z") * MultiPoly(3) == MultiPoly(3));
  CHECK((P("x*y - z^2") * P("x*y + z^2")) == P("x^2*y^2 - z^4"));
  CHECK(P("x+y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(P("x - x").is_zero());
  CHECK_FALSE(P("0").degree().has_value());
  CHECK(P("x^2*y + z").degree() == 3);
  CHECK_FALSE(P("x^2*y + z").is_homogeneous());
}

TEST_CASE("grlex order and printing") {
  const MultiPoly p = P("z^3 - 3/2*z^3 + x^2*y");
  CHECK(p.to_string() == "x^2*y - 1/2*z^3");
  CHECK(p.leading_term().first == Exponents{2, 1, 0});
  CHECK(P("y^2 + x*z").to_string() == "x*z + y^2");
  CHECK(L("v^2 - u").to_string() == "v^2 - u");
  CHECK(P("-1").to_string() == "-1");
  CHECK(MultiPoly(3).to_string() == "0");
}

TEST_CASE("compose, partial, substitute") {
  const std::array<MultiPoly, 3> sq{P("x^2"), P("y^2"), P("z^2")};
  CHECK(P("x").compose(sq) == P("x^2"));
  CHECK(P("x*y").compose(sq) == P("x^2*y^2"));
  CHECK(P("x*y - z^2").compose(sq) == P("x^2*y^2 - z^4"));
  CHECK(P("x^2*y").partial(0) == P("2*x*y"));
  CHECK(P("z^3").partial(0).is_zero());
  CHECK(P("x^2 + y*z").partial(2) == P("y"));
  CHECK(P("x^2 + y*z").substitute(2, 2) == P("x^2 + 2*y"));
}

TEST_CASE("jacobian, wronskian, minors") {
  CHECK(jacobian_det3(P("x^2"), P("y^2"), P("z^2")) == P("8*x*y*z"));
  CHECK(jacobian_det3(P("x^2"), P("y^2"), P("z^2 + x*y")) == P("8*x*y*z"));
  CHECK(jacobian_det3(P("x"), P("y"), P("z")) == P("1"));
  CHECK(wronskian2(L("u^2"), L("v^2")) == L("4*u*v"));
  CHECK(wronskian2(L("u^2"), L("(u+v)^2")) == L("4*u*(u+v)"));
  CHECK(wronskian2(L("u"), L("v")) == L("1"));
  auto m = minors2x3(P("x"), P("y"));
  CHECK(m[0] == P("1"));
  CHECK(m[1].is_zero());
  CHECK(m[2].is_zero());
  m = minors2x3(P("x*y"), P("z^2"));
  CHECK(m[0].is_zero());
  CHECK(m[1] == P("2*y*z"));
  CHECK(m[2] == P("2*x*z"));
  m = minors2x3(P("x^2 + y*z"), P("y^2"));
  CHECK(m[0] == P("4*x*y"));
  CHECK(m[1].is_zero());
  CHECK(m[2] == P("-2*y^2"));
}

TEST_CASE("gcd and canonical forms") {
  CHECK(gcd(P("x*y"), P("z^2")).degree() == 0);
  CHECK(gcd(P("2*y*z"), P("2*x*z")) == CF("z"));
  CHECK(gcd(P("x^2 - y^2"), P("x - y")) == CF("x - y"));
  CHECK(gcd(P("(x+y)^2*(x-z)"), P("(x+y)*(x-z)^3*y")) == CF("(x+y)*(x-z)"));
  CHECK(gcd(L("u^2 - v^2"), L("u^2 + 2*u*v + v^2")) == th::CL("u + v"));
  CHECK(CF("-2*x + 4*y") == CF("x - 2*y"));
  CHECK(CF("1/2*x*y - 1/3*z^2").poly() == P("3*x*y - 2*z^2"));
}

TEST_CASE("canonicalization is scale invariant") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly p = oracle::random_form(rng, 3, 1 + i % 4, 5);
    if (p.is_zero()) continue;
    const Scalar c = oracle::random_scalar(rng, 9, 7);
    CHECK(CanonicalForm(p * c) == CanonicalForm(p));
    CHECK(canonical_scale(p) * canonicalize(p) == p);
  }
}

TEST_CASE("factor: examples") {
  const Factorization f = factor(P("x^2*y^2 - z^4"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].second == 1);
  CHECK(f.factors[1].second == 1);
  CHECK(f.expand(3) == P("x^2*y^2 - z^4"));
  const std::vector<CanonicalForm> expect{CF("x*y - z^2"), CF("x*y + z^2")};
  CHECK(((f.factors[0].first == expect[0] && f.factors[1].first == expect[1]) ||
         (f.factors[0].first == expect[1] && f.factors[1].first == expect[0])));

  const Factorization cube = factor(P("x^3"));
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].first == CF("x"));
  CHECK(cube.factors[0].second == 3);

  CHECK(factor(P("z^2 + x*y")).is_irreducible());
  CHECK(factor(P("x^2 + y^2")).is_irreducible());
  CHECK(factor(P("-6*x^2*y")).unit == -6);
  CHECK(factor(L("u^4 - v^4")).factors.size() == 3);
}

TEST_CASE("factor: random products re-expand") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly p = MultiPoly::constant(3, oracle::random_scalar(rng, 5, 3));
    int pieces = 0;
    const int n = 1 + trial % 3;
    for (int i = 0; i < n; ++i) {
      MultiPoly q = oracle::random_form(rng, 3, 1 + (trial + i) % 3, 4);
      if (q.is_zero()) continue;
      p *= q;
      ++pieces;
    }
    if (*p.degree() == 0) continue;
    const Factorization f = factor(p);
    CHECK(f.expand(3) == p);
    int count = 0;
    for (const auto& [g, m] : f.factors) count += m;
    CHECK(count >= pieces);
  }
}

TEST_CASE("factor: irreducibility matches the Kronecker oracle") {
  std::mt19937_64 rng(13);
  int reducible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int arity = trial % 4 == 0 ? 2 : 3;
    const int degree = 2 + trial % 3;
    MultiPoly p = oracle::random_form(rng, arity, degree, 3, trial % 2 ? 0.5 : 0.3);
    if (trial % 5 == 0) {
      p = oracle::random_form(rng, arity, 1, 2) * oracle::random_form(rng, arity, degree - 1, 2);
    }
    if (p.is_zero() || *p.degree() < 2) continue;
    const bool expected = oracle::irreducible(p);
    if (!expected) ++reducible;
    CHECK_MESSAGE(factor(p).is_irreducible() == expected, p.to_string());
  }
  CHECK(reducible > 5);
}

TEST_CASE("factor: degree bound") {
  Config small{4, kDefaultSeed};
  CHECK_THROWS_AS(factor(P("x^5 + y^5 + z^5"), small), Error);
  CHECK(factor(P("x^4 + y^4 + z^4"), small).is_irreducible());
}

TEST_CASE("Kronecker oracle on known cases") {
  CHECK(oracle::irreducible(P("x*y + z^2")));
  CHECK_FALSE(oracle::irreducible(P("x^2*y^2 - z^4")));
  CHECK_FALSE(oracle::irreducible(P("x^2 - y^2")));
  CHECK(oracle::irreducible(L("u^2 + v^2")));
  CHECK_FALSE(oracle::irreducible(L("u^2 - 4*v^2")));
  CHECK_FALSE(oracle::irreducible(P("(x^2 + y*z)*(x*y + z^2)")));
}

TEST_CASE("Sylvester resultant") {
  CHECK(resultant(P("x - y"), P("x + y"), 0) == P("2*y"));
  CHECK(resultant(P("x*y"), P("z^2"), 2) == P("x^2*y^2"));
  CHECK(resultant(P("x"), P("x"), 0).is_zero());
}

TEST_CASE("Macaulay resultant") {
  CHECK(macaulay_resultant3(P("x"), P("y"), P("z")) != 0);
  CHECK(macaulay_resultant3(P("x^2"), P("x*y"), P("x*z")) == 0);
  CHECK(macaulay_resultant3(P("x^2"), P("y^2"), P("z^2")) != 0);
  CHECK(macaulay_resultant3(P("x^2"), P("y^3"), P("z")) == 1);
  // common zero [1:1:1]
  CHECK(macaulay_resultant3(P("x^2 - y*z"), P("x*y - z^2"), P("x - y")) == 0);
}

TEST_CASE("Macaulay resultant agrees with the full-matrix rank oracle") {
  std::mt19937_64 rng(17);
  int zero = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::array<MultiPoly, 3> f{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
    for (int i = 0; i < 3; ++i) {
      do {
        f[i] = oracle::random_form(rng, 3, 1 + (trial + i) % 2, 2, trial % 3 == 0 ? 0.25 : 0.6);
      } while (f[i].is_zero());
    }
    if (trial % 4 == 0) {
      // force a common zero at [1:0:0]
      for (auto& g : f) g.add_term({*g.degree(), 0, 0}, -g.coeff({*g.degree(), 0, 0}));
      for (auto& g : f) {
        if (g.is_zero()) g = P("y");
      }
    }
    bool homogeneous = true;
    for (const auto& g : f) homogeneous = homogeneous && g.is_homogeneous();
    if (!homogeneous) continue;
    const RationalMatrix m = macaulay_full_matrix(f[0], f[1], f[2]);
    const bool full = rank(m) == m.front().size();
    const Scalar r = macaulay_resultant3(f[0], f[1], f[2]);
    if (!full) ++zero;
    CHECK_MESSAGE((sgn(r) != 0) == full, f[0] << ", " << f[1] << ", " << f[2]);
  }
  CHECK(zero >= 5);
}

TEST_CASE("Macaulay resultant: scaling law") {
  const MultiPoly p = P("x^2 + y*z"), q = P("y^2 - x*z + z^2"), r = P("x + 2*y - z");
  const Scalar base = macaulay_resultant3(p, q, r);
  REQUIRE(base != 0);
  // homogeneous of degree d2*d3 in the coefficients of p, d1*d3 in q, d1*d2 in r
  CHECK(macaulay_resultant3(p * Scalar(3), q, r) == base * 9);
  CHECK(macaulay_resultant3(p, q, r * Scalar(5)) == base * 625);
  CHECK(macaulay_resultant3(p, q * Scalar(2), r) == base * 4);
}

TEST_CASE("parametric resultant of a pencil's partials") {
  // [xy : z^2]: members l*xy + m*z^2 are singular exactly when l*m = 0
  LinearFormTriple t;
  t.at_l = {P("y"), P("x"), MultiPoly(3)};
  t.at_m = {MultiPoly(3), MultiPoly(3), P("2*z")};
  t.degrees = {1, 1, 1};
  const MultiPoly res = macaulay_resultant3(t);
  CHECK(CanonicalForm(res) == th::CL("u^2*v"));
}

TEST_CASE("linear change") {
  const MultiPoly p = P("x^2*y");
  CHECK(linear_change(p, identity3()) == p);
  const Mat3 swap{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  CHECK(linear_change(p, swap) == P("x*y^2"));
  const Mat3 shear{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}};
  CHECK(linear_change(P("z^2"), shear) == P("z^2 + 2*x*z + x^2"));
  const Mat3 singular{{{1, 0, 0}, {1, 0, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(linear_change(p, singular), Error);
}

TEST_CASE("linear algebra") {
  RationalMatrix a{{1, 2}, {2, 4}};
  CHECK(rank(a) == 1);
  CHECK_FALSE(solve(a, {1, 1}).has_value());
  const auto x = solve(a, {3, 6});
  REQUIRE(x);
  CHECK((*x)[0] + 2 * (*x)[1] == 3);
  CHECK(nullspace(a).size() == 1);
  CHECK(bareiss_det<Scalar>({{2, 1}, {1, 3}}, Scalar(1)) == 5);
  const Mat3 m{{{2, 1, 0}, {0, 1, 0}, {1, 0, 1}}};
  const auto inv = inverse3(m);
  REQUIRE(inv);
  CHECK(det3(m) == 2);
  CHECK(det3(*inv) == Scalar(1, 2));
}

TEST_CASE("parser") {
  CHECK(parse_poly("x^2*y - 3/2*z^3") == P("x^2*y") - P("z^3") * Scalar(3, 2));
  const MultiPoly q = parse_form("x*y + z^2", 3);
  CHECK(q.degree() == 2);
  CHECK_THROWS_WITH_AS(parse_form("x + y^2", 3), doctest::Contains("1, 2"), Error);
  try {
    parse_form("x + y^2", 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
  CHECK_THROWS_AS(parse_poly("2xy"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x*u"), Error);
  CHECK_THROWS_AS(parse_poly("x^2^3"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("1/0"), SyntaxError);
  try {
    parse_poly("x + * y");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK(parse_poly("-x^2") == P("x^2") * Scalar(-1));
  CHECK(parse_poly("-(x+y)^2 + 2*x*y") == P("-x^2 - y^2"));
  CHECK(parse_poly("u*v", 3).arity() == 2);
}

TEST_CASE("parse then print then parse is the identity") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = oracle::random_form(rng, 2 + i % 2, 1 + i % 5, 9);
    p *= oracle::random_scalar(rng, 5, 4);
    CHECK(parse_poly(p.to_string(), p.arity()) == p);
  }
}

TEST_CASE("properties on random small pairs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly common = oracle::random_form(rng, 3, 1, 2);
    if (common.is_zero() || trial % 2) common = MultiPoly::constant(3, 1);
    const MultiPoly p = oracle::random_form(rng, 3, 1 + trial % 2, 3) * common;
    const MultiPoly q = oracle::random_form(rng, 3, 2, 3) * common;
    if (p.is_zero() || q.is_zero()) continue;
    const CanonicalForm g = gcd(p, q);
    CHECK(divide_exact(p, g.poly()).has_value());
    CHECK(divide_exact(q, g.poly()).has_value());
    for (int var = 0; var < 3; ++var) {
      const bool shares = g.poly().degree_in(var).value_or(0) > 0;
      CHECK(resultant(p, q, var).is_zero() == shares);
    }
  }
}

TEST_CASE("Wronskian degree") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 4;
    const MultiPoly g0 = oracle::random_form(rng, 2, d, 4, 0.8);
    const MultiPoly g1 = oracle::random_form(rng, 2, d, 4, 0.8);
    const MultiPoly w = wronskian2(g0, g1);
    if (!w.is_zero()) CHECK(w.degree() == 2 * d - 2);
  }
}
