#include "pencilkit/invariance.hpp"

#include <numeric>

#include "pencilkit/constructions.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/linalg.hpp"

namespace pk {

namespace {

/// Products a^i b^(d-i), i = 0..d.
std::vector<MultiPoly> product_basis(const MultiPoly& a, const MultiPoly& b, int d) {
  std::vector<MultiPoly> a_pow{MultiPoly::constant(a.arity(), 1)};
  std::vector<MultiPoly> b_pow{MultiPoly::constant(a.arity(), 1)};
  for (int i = 1; i <= d; ++i) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  std::vector<MultiPoly> out;
  for (int i = 0; i <= d; ++i) out.push_back(a_pow[i] * b_pow[d - i]);
  return out;
}

/// Coefficients expressing target in the basis, or nullopt.
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<MultiPoly>& basis, const MultiPoly& target) {
  std::map<Exponents, std::size_t, GrlexGreater> rows;
  for (const auto& p : basis) {
    for (const auto& [e, c] : p.terms()) rows.emplace(e, rows.size());
  }
  for (const auto& [e, c] : target.terms()) {
    if (!rows.count(e)) return std::nullopt;
  }
  RationalMatrix m(rows.size(), std::vector<Scalar>(basis.size(), Scalar(0)));
  std::vector<Scalar> rhs(rows.size(), Scalar(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [e, c] : basis[j].terms()) m[rows.at(e)][j] = c;
  }
  for (const auto& [e, c] : target.terms()) rhs[rows.at(e)] = c;
  return solve(m, rhs);
}

MultiPoly binary_form(const std::vector<Scalar>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  MultiPoly g(2);
  for (int i = 0; i <= d; ++i) g.add_term({i, d - i, 0}, c[i]);
  return g;
}

MultiPoly power_of(int arity, int var, int n) {
  Exponents e{0, 0, 0};
  e[var] = n;
  return MultiPoly::monomial(arity, e);
}

}  // namespace

InvarianceCertificate check_invariance(const PlaneEndo& f, const Pencil& pencil) {
  const int d = f.degree();
  const int k = pencil.k();
  if (k * d > pencil.config().degree_bound) {
    throw Error(ErrorKind::DegreeBoundExceeded, "check_invariance: k*d = " + std::to_string(k * d) +
                                                    " exceeds bound " +
                                                    std::to_string(pencil.config().degree_bound));
  }
  const auto basis = product_basis(pencil.a(), pencil.b(), d);
  const MultiPoly af = f.pull(pencil.a());
  const MultiPoly bf = f.pull(pencil.b());
  auto c0 = solve_in_span(basis, af);
  if (!c0) throw Error(ErrorKind::NotInvariant, "A o f is not a form in A and B");
  auto c1 = solve_in_span(basis, bf);
  if (!c1) throw Error(ErrorKind::NotInvariant, "B o f is not a form in A and B");
  InvarianceCertificate cert{LineEndo(binary_form(*c0), binary_form(*c1)), *c0, *c1};

  const std::array<MultiPoly, 2> ab{pencil.a(), pencil.b()};
  if (!(cert.g.g0().compose(ab) == af) || !(cert.g.g1().compose(ab) == bf)) {
    throw Error(ErrorKind::Precondition, "check_invariance: certificate failed re-expansion");
  }
  return cert;
}

PlaneDivisor pullback_line(const Pencil& pencil, const LineDivisor& d) {
  const std::array<MultiPoly, 2> ab{pencil.a(), pencil.b()};
  PlaneDivisor out;
  for (const auto& [q, m] : d.entries()) {
    if (q.degree() * pencil.k() > pencil.config().degree_bound) {
      throw Error(ErrorKind::NormConstructionBound,
                  "pullback of " + q.to_string() + " has degree above the bound");
    }
    out += m * plane_divisor_of(q.poly().compose(ab), pencil.config());
  }
  return out;
}

LemmaThreeReport verify_lemma3(const PlaneEndo& f, const Pencil& pencil, const InvarianceCertificate& cert) {
  const Config& config = pencil.config();
  LemmaThreeReport r;
  r.r_f = ramification_f(f, config);
  r.r_f_pencil = restrict_to_pencil(r.r_f, pencil);
  r.r_pi = pencil.ramification_divisor_pi();
  r.pullback_r_pi = pullback_plane(f, r.r_pi, config);
  r.r_g = ramification_g(cert.g, config);
  r.pullback_r_g = pullback_line(pencil, r.r_g);
  r.lhs = r.r_f_pencil + r.pullback_r_pi;
  r.rhs = r.r_pi + r.pullback_r_g;
  r.equal = (r.lhs - r.rhs).empty();
  r.deg_rfp = r.r_f_pencil.degree();
  r.e = 2 * pencil.k() - r.r_pi.degree();
  r.e_times_dminus1 = r.e * (f.degree() - 1);
  return r;
}

int e_dichotomy(const PlaneEndo& f, const Pencil& pencil) {
  if (f.degree() < 2) throw Error(ErrorKind::Precondition, "e_dichotomy: needs degree at least 2");
  check_invariance(f, pencil);
  const int e = pencil.e_invariant();
  if (e != 2 && e != 3) {
    throw Error(ErrorKind::DichotomyViolation, "invariant pencil with e = " + std::to_string(e));
  }
  return e;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TheoremConsistent: return "TheoremConsistent";
    case Verdict::TheoremViolation: return "TheoremViolation";
    case Verdict::ReduciblePencil: return "ReduciblePencil";
  }
  return "?";
}

PairClassification classify_invariant_pair(const PlaneEndo& f, const Pencil& pencil) {
  check_invariance(f, pencil);
  PairClassification out{pencil.classify_shape(), Verdict::TheoremConsistent};
  if (!pencil.generic_member_irreducible()) {
    out.verdict = Verdict::ReduciblePencil;
  } else if (std::holds_alternative<OtherShape>(out.shape)) {
    out.verdict = Verdict::TheoremViolation;
  }
  return out;
}

void TheoremFamilySpec::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidFamily, why); };
  if (d < 2) fail("d must be at least 2");
  if (h <= 0 || h >= k) fail("need 0 < h < k");
  if (std::gcd(h, k) != 1) fail("h and k must be coprime");
  if (l < 0 || l * k > d) fail("need 0 <= l <= d/k");
  if (static_cast<int>(c.size()) != l) fail("need exactly l coefficients c_i");
  for (const auto& ci : c) {
    if (sgn(ci) == 0) fail("coefficients c_i must be nonzero");
  }
  if (swap && 2 * h != k) fail("the swapped map preserves the pencil only when k = 2h");
}

bool TheoremFamilySpec::valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string TheoremFamilySpec::to_string() const {
  std::string cs;
  for (const auto& ci : c) cs += (cs.empty() ? "" : ",") + scalar_to_string(ci);
  return "d=" + std::to_string(d) + " k=" + std::to_string(k) + " h=" + std::to_string(h) +
         " l=" + std::to_string(l) + " c=(" + cs + ")" + (swap ? " swap" : "");
}

std::array<MultiPoly, 2> family_pencil_forms(const TheoremFamilySpec& spec) {
  return {MultiPoly::monomial(3, {spec.h, spec.k - spec.h, 0}), power_of(3, 2, spec.k)};
}

std::array<MultiPoly, 3> family_map_components(const TheoremFamilySpec& spec) {
  const auto [binom, zk] = family_pencil_forms(spec);
  MultiPoly r = power_of(3, 2, spec.d - spec.k * spec.l);
  for (const auto& ci : spec.c) r *= zk + binom * ci;
  MultiPoly xd = power_of(3, 0, spec.d);
  MultiPoly yd = power_of(3, 1, spec.d);
  if (spec.swap) std::swap(xd, yd);
  return {xd, yd, r};
}

std::pair<PlaneEndo, Pencil> generate_theorem_family(const TheoremFamilySpec& spec, const Config& config) {
  spec.validate();
  const auto [xd, yd, r] = family_map_components(spec);
  const auto [a, b] = family_pencil_forms(spec);
  PlaneEndo f(xd, yd, r, config);
  Pencil pencil(a, b, config);
  check_invariance(f, pencil);
  return {f, pencil};
}

std::vector<TheoremFamilySpec> theorem_family_grid(int d_max, const std::vector<int>& ks,
                                                   const std::vector<Scalar>& c_values) {
  std::vector<TheoremFamilySpec> out;
  for (int d = 2; d <= d_max; ++d) {
    for (int k : ks) {
      for (int h = 1; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        for (int l = 0; l * k <= d; ++l) {
          // all l-tuples over c_values, odometer style
          std::vector<std::size_t> idx(l, 0);
          while (true) {
            for (bool swap : {false, true}) {
              TheoremFamilySpec s{d, k, h, l, {}, swap};
              for (auto i : idx) s.c.push_back(c_values[i]);
              out.push_back(std::move(s));
            }
            int pos = l - 1;
            while (pos >= 0 && ++idx[pos] == c_values.size()) idx[pos--] = 0;
            if (pos < 0) break;
          }
        }
      }
    }
  }
  return out;
}

std::pair<PlaneEndo, Pencil> generate_elementary(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r,
                                                 const Config& config) {
  auto as_ternary = [](const MultiPoly& f) {
    if (f.arity() == 2) return f.with_arity(3);
    if (f.depends_on(2)) throw Error(ErrorKind::Precondition, "generate_elementary: P and Q must not involve z");
    return f;
  };
  const MultiPoly p3 = as_ternary(p);
  const MultiPoly q3 = as_ternary(q);
  const CanonicalForm g = gcd(p3, q3);
  if (g.degree() > 0) throw Error(ErrorKind::NotCoprime, "generate_elementary: gcd(P, Q) = " + g.to_string());
  PlaneEndo f(p3, q3, r, config);
  Pencil pencil(MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), config);
  check_invariance(f, pencil);
  return {f, pencil};
}

std::optional<LineEndo> solve_semiconjugacy(const LineEndo& phi, const LineEndo& gprime) {
  const int d = gprime.degree();
  const auto basis = product_basis(phi.g0(), phi.g1(), d);
  const std::array<MultiPoly, 2> gp{gprime.g0(), gprime.g1()};
  const auto c0 = solve_in_span(basis, phi.g0().compose(gp));
  const auto c1 = solve_in_span(basis, phi.g1().compose(gp));
  if (!c0 || !c1) return std::nullopt;
  try {
    return LineEndo(binary_form(*c0), binary_form(*c1));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace pk
