#include "pencilkit/report.hpp"

namespace pk {

namespace {

template <class D>
Json divisor_json(const D& d) {
  Json out = Json::array();
  for (const auto& [f, m] : d.entries()) out.push_back({{"form", f.to_string()}, {"multiplicity", m}});
  return out;
}

Json scalars(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_to_string(c));
  return out;
}

}  // namespace

Json to_json(const PlaneDivisor& d) { return divisor_json(d); }
Json to_json(const LineDivisor& d) { return divisor_json(d); }

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [g, m] : f.factors) factors.push_back({{"form", g.to_string()}, {"multiplicity", m}});
  return {{"unit", scalar_to_string(f.unit)}, {"factors", factors}};
}

Json to_json(const Mat3& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(scalars({row[0], row[1], row[2]}));
  return out;
}

Json to_json(const PencilClass& c) {
  if (const auto* e = std::get_if<Elementary>(&c)) {
    return {{"type", "Elementary"}, {"base_point", e->base_point.to_string()}};
  }
  if (const auto* b = std::get_if<Binomial>(&c)) {
    return {{"type", "Binomial"}, {"h", b->h}, {"k", b->k}, {"matrix", to_json(b->matrix)}};
  }
  return {{"type", "Other"}, {"reason", std::get<OtherShape>(c).reason}};
}

Json to_json(const LineAudit& a) {
  return {{"line", {a.line[0].to_string(), a.line[1].to_string(), a.line[2].to_string()}},
          {"restricted", {a.restricted_a.to_string(), a.restricted_b.to_string()}},
          {"wronskian", a.wronskian.to_string()},
          {"ram_degree", a.ram_degree},
          {"on_Rpi_degree", a.on_rpi_degree},
          {"t", a.t},
          {"conclusive", a.conclusive},
          {"identity_holds", a.identity_holds}};
}

Json to_json(const DiophantineSolution& s) {
  Json out;
  out["k"] = s.k ? Json(*s.k) : Json(nullptr);
  out["multiplicities"] = s.multiplicities;
  return out;
}

Json pencil_report(const Pencil& pencil) {
  Json out;
  out["A"] = pencil.a().to_string();
  out["B"] = pencil.b().to_string();
  out["degree"] = pencil.k();

  const auto& base = pencil.base_points_rational();
  Json points = Json::array();
  for (const auto& [p, m] : base.points) points.push_back({{"point", p.to_string()}, {"multiplicity", m}});
  out["base_points"] = {{"rational", points},
                        {"rational_total", base.rational_total},
                        {"residual", base.residual},
                        {"total", base.total}};

  Json special = Json::array();
  for (const auto& s : pencil.special_members()) {
    Json j;
    if (s.resolved()) {
      j["parameter"] = s.parameter->to_string();
      j["factorization"] = to_json(*s.factorization);
    } else {
      j["parameter"] = nullptr;
      j["minimal_polynomial"] = s.minimal_polynomial.to_string();
    }
    j["is_reduced"] = s.is_reduced;
    j["is_irreducible"] = s.is_irreducible;
    j["ramification_contribution"] =
        s.contribution_known ? to_json(s.ramification_contribution) : Json(nullptr);
    special.push_back(std::move(j));
  }
  out["special_members"] = special;

  const auto& r_pi = pencil.ramification_divisor_pi();
  out["R_pi"] = {{"divisor", to_json(r_pi)}, {"degree", r_pi.degree()}};
  out["minor_gcd_check"] = {{"divisor", to_json(pencil.minor_gcd_divisor())},
                            {"agrees", pencil.minor_gcd_divisor() == r_pi}};
  out["e"] = pencil.e_invariant();
  out["class"] = to_json(pencil.classify_shape());
  out["generic_member_irreducible"] = pencil.generic_member_irreducible();
  out["irreducibility_field"] = "Q";
  out["warnings"] = pencil.warnings();
  return out;
}

Json endo_report(const PlaneEndo& f, const Config& config) {
  const PlaneDivisor r_f = ramification_f(f, config);
  return {{"map", f.to_string()},
          {"degree", f.degree()},
          {"morphism", true},
          {"R_f", {{"divisor", to_json(r_f)}, {"degree", r_f.degree()}, {"expected_degree", 3 * (f.degree() - 1)}}}};
}

Json certificate_report(const InvarianceCertificate& cert) {
  return {{"invariant", true},
          {"g", {cert.g.g0().to_string(), cert.g.g1().to_string()}},
          {"coeffs0", scalars(cert.coeffs0)},
          {"coeffs1", scalars(cert.coeffs1)}};
}

Json lemma3_report(const LemmaThreeReport& r) {
  return {{"equal", r.equal},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"R_f", to_json(r.r_f)},
          {"R_f_P", to_json(r.r_f_pencil)},
          {"f_pullback_R_pi", to_json(r.pullback_r_pi)},
          {"R_pi", to_json(r.r_pi)},
          {"R_g", to_json(r.r_g)},
          {"pi_pullback_R_g", to_json(r.pullback_r_g)},
          {"deg_RfP", r.deg_rfp},
          {"expected", r.e_times_dminus1}};
}

PairVerdict pair_verdict(const PlaneEndo& f, const Pencil& pencil) {
  PairVerdict v;
  Json violations = Json::array();
  InvarianceCertificate cert = check_invariance(f, pencil);
  const LemmaThreeReport l3 = verify_lemma3(f, pencil, cert);
  if (!l3.equal) violations.push_back("ramification identity fails");
  if (l3.equal && l3.deg_rfp != l3.e_times_dminus1) violations.push_back("deg R_f^P differs from e(d-1)");
  const int e = pencil.e_invariant();
  if (f.degree() >= 2 && e != 2 && e != 3) violations.push_back("e is neither 2 nor 3");
  const PairClassification cls = classify_invariant_pair(f, pencil);
  if (cls.verdict == Verdict::TheoremViolation) violations.push_back("invariant irreducible pencil of other shape");

  v.json["invariant"] = true;
  v.json["g"] = {cert.g.g0().to_string(), cert.g.g1().to_string()};
  v.json["lemma3"] = lemma3_report(l3);
  v.json["e"] = e;
  v.json["class"] = describe(cls.shape);
  v.json["verdict"] = to_string(cls.verdict);
  v.json["violations"] = violations;
  v.ok = violations.empty();
  return v;
}

}  // namespace pk
