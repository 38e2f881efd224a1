#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pencilkit/constructions.hpp"
#include "pencilkit/diophantine.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/invariance.hpp"

using namespace pk;
using th::endo;
using th::L;
using th::line_endo;
using th::P;
using th::pencil;

TEST_CASE("invariance certificates") {
  auto c = check_invariance(endo("x^2", "y^2", "z^2"), pencil("x", "y"));
  CHECK(c.g == line_endo("u^2", "v^2"));
  c = check_invariance(endo("x^2", "y^2", "z^2 + x*y"), pencil("x*y", "z^2"));
  CHECK(c.g == line_endo("u^2", "(u+v)^2"));
  CHECK(c.g.to_string() == "[u^2 : u^2 + 2*u*v + v^2]");
  try {
    check_invariance(endo("x^2", "y^2", "z^2"), pencil("x + z", "y"));
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
  CHECK_THROWS_AS(check_invariance(endo("x^2", "y^2", "z^2 + x^2"), pencil("x*y", "z^2")), Error);
}

TEST_CASE("certificate re-expands: pi o f = g o pi") {
  const PlaneEndo f = endo("x^3", "y^3", "z*(z^2 + 2*x*y)");
  const Pencil p = pencil("x*y", "z^2");
  const auto c = check_invariance(f, p);
  const std::array<MultiPoly, 2> ab{p.a(), p.b()};
  CHECK(c.g.g0().compose(ab) == f.pull(p.a()));
  CHECK(c.g.g1().compose(ab) == f.pull(p.b()));
  CHECK(c.g.degree() == 3);
}

TEST_CASE("ramification identity on the basic binomial pair") {
  const PlaneEndo f = endo("x^2", "y^2", "z^2 + x*y");
  const Pencil p = pencil("x*y", "z^2");
  const auto r = verify_lemma3(f, p, check_invariance(f, p));
  CHECK(r.equal);
  CHECK(r.r_pi == th::divisor({{"z", 1}}));
  CHECK(r.r_f_pencil == th::divisor({{"x", 1}, {"y", 1}, {"z", 1}}));
  CHECK(r.deg_rfp == 3);
  CHECK(r.e == 3);
  CHECK(r.e_times_dminus1 == 3);
  CHECK(r.lhs == th::divisor({{"x", 1}, {"y", 1}, {"z", 1}, {"x*y + z^2", 1}}));
}

TEST_CASE("ramification identity on elementary pairs") {
  const auto [f, p] = generate_elementary(P("x^2 + y^2"), P("x*y"), P("z^2"));
  const auto cert = check_invariance(f, p);
  CHECK(cert.g == line_endo("u^2 + v^2", "u*v"));
  const auto r = verify_lemma3(f, p, cert);
  CHECK(r.equal);
  CHECK(r.deg_rfp == 2);
  CHECK(r.e == 2);
  CHECK(e_dichotomy(f, p) == 2);
}

TEST_CASE("e dichotomy") {
  CHECK(e_dichotomy(endo("x^2", "y^2", "z^2 + x*y"), pencil("x*y", "z^2")) == 3);
  CHECK(e_dichotomy(endo("x^2", "y^2", "z^2"), pencil("x", "y")) == 2);
  CHECK_THROWS_AS(e_dichotomy(endo("x", "y", "z"), pencil("x", "y")), Error);
}

TEST_CASE("classification of invariant pairs") {
  auto c = classify_invariant_pair(endo("x^2", "y^2", "z^2"), pencil("x", "y"));
  CHECK(std::holds_alternative<Elementary>(c.shape));
  CHECK(c.verdict == Verdict::TheoremConsistent);
  c = classify_invariant_pair(endo("x^2", "y^2", "z^2 + x*y"), pencil("x*y", "z^2"));
  REQUIRE(std::holds_alternative<Binomial>(c.shape));
  CHECK(std::get<Binomial>(c.shape).h == 1);
  c = classify_invariant_pair(endo("y^2", "x^2", "z^2"), pencil("x*y", "z^2"));
  CHECK(std::holds_alternative<Binomial>(c.shape));
  c = classify_invariant_pair(endo("x^2", "y^2", "z^2"), pencil("x^2", "y^2"));
  CHECK(c.verdict == Verdict::ReduciblePencil);
}

TEST_CASE("normal-form family generator") {
  auto [f, p] = generate_theorem_family({2, 2, 1, 0, {}, false});
  CHECK(f.components() == endo("x^2", "y^2", "z^2").components());
  std::tie(f, p) = generate_theorem_family({2, 2, 1, 1, {1}, false});
  CHECK(f.r() == P("z^2 + x*y"));
  std::tie(f, p) = generate_theorem_family({3, 2, 1, 1, {2}, true});
  CHECK(f.components() == endo("y^3", "x^3", "z*(z^2 + 2*x*y)").components());
  std::tie(f, p) = generate_theorem_family({4, 3, 2, 1, {-1}, false});
  CHECK(f.r() == P("z*(z^3 - x^2*y)"));

  auto invalid = [](TheoremFamilySpec s) {
    try {
      s.validate();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidFamily;
    }
    return false;
  };
  CHECK(invalid({2, 2, 1, 2, {1, 1}, false}));   // l*k > d
  CHECK(invalid({3, 3, 1, 1, {1}, true}));       // swap needs k = 2h
  CHECK(invalid({2, 2, 2, 0, {}, false}));       // h = k
  CHECK(invalid({2, 4, 2, 0, {}, false}));       // gcd(h, k) = 2
  CHECK(invalid({2, 2, 1, 1, {0}, false}));      // zero coefficient
  CHECK(invalid({1, 2, 1, 0, {}, false}));       // d = 1
}

TEST_CASE("swap tuples excluded by validation are not invariant") {
  int excluded = 0;
  for (const auto& s : theorem_family_grid(4, {3}, {1, 2, -1})) {
    if (s.valid()) continue;
    ++excluded;
    const auto comps = family_map_components(s);
    const auto forms = family_pencil_forms(s);
    const PlaneEndo f(comps[0], comps[1], comps[2]);
    const Pencil p(forms[0], forms[1]);
    CHECK_THROWS_AS(check_invariance(f, p), Error);
  }
  CHECK(excluded == 18);
}

TEST_CASE("semiconjugacy") {
  CHECK(solve_semiconjugacy(line_endo("u^2", "v^2"), line_endo("u^2", "v^2")) == line_endo("u^2", "v^2"));
  CHECK(solve_semiconjugacy(line_endo("u^2", "v^2"), line_endo("u^3", "v^3")) == line_endo("u^3", "v^3"));
  CHECK(solve_semiconjugacy(line_endo("u^2", "v^2"), line_endo("v^2", "u^2")) == line_endo("v^2", "u^2"));
  // phi o g' must be a form in phi: here it is not
  CHECK_FALSE(solve_semiconjugacy(line_endo("u^2", "v^2"), line_endo("u^2 + u*v", "v^2")).has_value());
}

TEST_CASE("multiplicity equations") {
  const auto s2 = diophantine_solutions(DiophantineKind::SectionTwo, 10000, 1000);
  const std::vector<DiophantineSolution> expect{{2, {2}}, {90, {2, 3, 5}}};
  CHECK(s2 == expect);
  for (int k = 2; k <= 50; ++k) {
    const auto t = diophantine_solutions(DiophantineKind::TwoLine, k, 1000);
    std::vector<int> hits;
    for (const auto& s : t) {
      if (*s.k == k) {
        CHECK(s.multiplicities == std::vector<int>{k});
        hits.push_back(k);
      }
    }
    CHECK(hits.size() == 1);
  }
  const auto three = diophantine_solutions(DiophantineKind::ThreeLine, 50, 1000);
  REQUIRE(three.size() == 1);
  CHECK(three[0].multiplicities == std::vector<int>{2, 2});
  CHECK_FALSE(three[0].k.has_value());
  CHECK_THROWS_AS(diophantine_solutions(DiophantineKind::TwoLine, 1, 10), Error);
}

TEST_CASE("conjugating by a linear change preserves the invariant data") {
  std::mt19937_64 rng(29);
  const std::vector<TheoremFamilySpec> specs{
      {2, 2, 1, 1, {1}, false}, {3, 2, 1, 1, {-1}, true}, {3, 3, 1, 1, {2}, false}, {4, 3, 2, 0, {}, false}};
  for (const auto& spec : specs) {
    const auto [f, p] = generate_theorem_family(spec);
    const Mat3 m = random_unimodular(rng, 2);
    const Mat3 inv = *inverse3(m);
    std::array<MultiPoly, 3> moved{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) moved[i] += linear_change(f.components()[j], m) * inv[i][j];
    }
    const PlaneEndo g(moved[0], moved[1], moved[2]);
    const Pencil q(linear_change(p.a(), m), linear_change(p.b(), m));
    const auto cert = check_invariance(g, q);
    CHECK(cert.g == check_invariance(f, p).g);
    CHECK(q.e_invariant() == 3);
    CHECK(verify_lemma3(g, q, cert).equal);
    const PencilClass c = q.classify_shape();
    REQUIRE(std::holds_alternative<Binomial>(c));
    const Binomial& b = std::get<Binomial>(c);
    CHECK((b.h == spec.h || b.h == spec.k - spec.h));
    const Pencil normal(MultiPoly::monomial(3, {b.h, b.k - b.h, 0}), MultiPoly::monomial(3, {0, 0, b.k}));
    CHECK(lies_in_pencil(CanonicalForm(linear_change(q.a(), b.matrix)), normal).parameter.has_value());
    CHECK(lies_in_pencil(CanonicalForm(linear_change(q.b(), b.matrix)), normal).parameter.has_value());
  }
}

TEST_CASE("semiconjugacy by the identity returns g'") {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"u^2", "v^2"}, {"u^2 + v^2", "u*v"}, {"u^3 - v^3", "u*v^2"}, {"u", "u + v"}}) {
    CHECK(solve_semiconjugacy(line_endo("u", "v"), line_endo(a, b)) == line_endo(a, b));
  }
}

TEST_CASE("section2 solutions are stable under larger bounds") {
  CHECK(diophantine_solutions(DiophantineKind::SectionTwo, 180, 10) ==
        diophantine_solutions(DiophantineKind::SectionTwo, 360, 20));
}
