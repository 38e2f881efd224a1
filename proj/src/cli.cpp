#include "pencilkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "pencilkit/errors.hpp"
#include "pencilkit/parse.hpp"
#include "pencilkit/report.hpp"

namespace pk {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  int degree_bound = kDefaultDegreeBound;
  std::uint64_t seed = kDefaultSeed;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PENCILKIT_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      // fall through to the built-in seed
    }
  }
  return kDefaultSeed;
}

std::string seed_text(std::uint64_t seed) {
  std::ostringstream s;
  s << "0x" << std::hex << seed;
  return s.str();
}

/// What a subcommand produced: a JSON document, its text rendering and an
/// exit status.
struct Outcome {
  Json json;
  std::string text;
  int status = kOk;
};

std::string divisor_text(const PlaneDivisor& d) { return d.to_string(); }

Outcome pencil_info(const std::string& a, const std::string& b, const Config& config) {
  const Pencil pencil(parse_form(a, 3), parse_form(b, 3), config);
  Outcome o;
  o.json = pencil_report(pencil);
  std::ostringstream t;
  t << "pencil [" << pencil.a() << " : " << pencil.b() << "], degree k = " << pencil.k() << "\n";
  const auto& base = pencil.base_points_rational();
  t << "base points:";
  for (const auto& [p, m] : base.points) t << " " << p.to_string() << " (mult " << m << ")";
  t << "\n  rational total " << base.rational_total << ", residual " << base.residual << ", k^2 = "
    << base.total << "\n";
  t << "special members:\n";
  for (const auto& s : pencil.special_members()) {
    if (s.resolved()) {
      t << "  " << s.parameter->to_string() << " ";
      for (const auto& [f, m] : s.factorization->factors) {
        t << "(" << f.to_string() << ")" << (m > 1 ? "^" + std::to_string(m) : "");
      }
    } else {
      t << "  roots of " << s.minimal_polynomial;
    }
    t << (s.is_reduced ? " reduced" : " non-reduced") << (s.is_irreducible ? " irreducible" : " reducible")
      << "\n";
  }
  const auto& r_pi = pencil.ramification_divisor_pi();
  t << "R_pi = " << divisor_text(r_pi) << " (degree " << r_pi.degree() << ")\n";
  if (!(pencil.minor_gcd_divisor() == r_pi)) {
    t << "warning: minor-gcd divisor " << divisor_text(pencil.minor_gcd_divisor()) << " disagrees\n";
  }
  t << "e = " << pencil.e_invariant() << "\n";
  t << "class: " << describe(pencil.classify_shape()) << "\n";
  t << "generic member irreducible over Q: " << (pencil.generic_member_irreducible() ? "yes" : "no") << "\n";
  o.text = t.str();
  return o;
}

PlaneEndo parse_endo(const std::string& text, const Config& config) {
  const auto c = parse_plane_map(text);
  return PlaneEndo(c[0], c[1], c[2], config);
}

Outcome endo_info(const std::string& map, const Config& config) {
  Outcome o;
  const auto c = parse_plane_map(map);
  try {
    const PlaneEndo f(c[0], c[1], c[2], config);
    o.json = endo_report(f, config);
    const PlaneDivisor r_f = ramification_f(f, config);
    o.text = "map " + f.to_string() + ", degree " + std::to_string(f.degree()) + "\nmorphism: yes\nR_f = " +
             r_f.to_string() + " (degree " + std::to_string(r_f.degree()) + ", expected " +
             std::to_string(3 * (f.degree() - 1)) + ")\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAMorphism) throw;
    o.json = {{"map", map}, {"morphism", false}, {"reason", e.what()}};
    o.text = "morphism: no (" + std::string(e.what()) + ")\n";
    o.status = kNegative;
  }
  return o;
}

/// Runs body; NotInvariant becomes a negative outcome.
Outcome with_invariance(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInvariant) throw;
    Outcome o;
    o.json = {{"invariant", false}, {"reason", e.what()}};
    o.text = "invariant: no (" + std::string(e.what()) + ")\n";
    o.status = kNegative;
    return o;
  }
}

std::string reducible_note(const Pencil& pencil) {
  return pencil.generic_member_irreducible()
             ? ""
             : "note: generic member is reducible over Q; invariance means preimages of fibers are unions of fibers\n";
}

Outcome invariance(const std::string& map, const std::string& a, const std::string& b, const Config& config) {
  const PlaneEndo f = parse_endo(map, config);
  const Pencil pencil(parse_form(a, 3), parse_form(b, 3), config);
  return with_invariance([&] {
    const InvarianceCertificate cert = check_invariance(f, pencil);
    Outcome o;
    o.json = certificate_report(cert);
    o.json["pencil_irreducible"] = pencil.generic_member_irreducible();
    o.text = "invariant: yes\ng = " + cert.g.to_string() + "\n" + reducible_note(pencil);
    return o;
  });
}

Outcome lemma3(const std::string& map, const std::string& a, const std::string& b, const Config& config) {
  const PlaneEndo f = parse_endo(map, config);
  const Pencil pencil(parse_form(a, 3), parse_form(b, 3), config);
  return with_invariance([&] {
    const InvarianceCertificate cert = check_invariance(f, pencil);
    const LemmaThreeReport r = verify_lemma3(f, pencil, cert);
    Outcome o;
    o.json = {{"invariant", true}, {"g", {cert.g.g0().to_string(), cert.g.g1().to_string()}}};
    o.json["lemma3"] = lemma3_report(r);
    o.json["e"] = r.e;
    std::ostringstream t;
    t << "g = " << cert.g.to_string() << "\n"
      << "R_f^P + f*R_pi = " << r.lhs.to_string() << "\n"
      << "R_pi + pi*R_g  = " << r.rhs.to_string() << "\n"
      << "equal: " << (r.equal ? "yes" : "no") << "\n"
      << "deg R_f^P = " << r.deg_rfp << ", e(d-1) = " << r.e_times_dminus1 << "\n";
    o.text = t.str();
    o.status = r.equal && r.deg_rfp == r.e_times_dminus1 ? kOk : kNegative;
    return o;
  });
}

Outcome classify(const std::string& map, const std::string& a, const std::string& b, const Config& config) {
  const PlaneEndo f = parse_endo(map, config);
  const Pencil pencil(parse_form(a, 3), parse_form(b, 3), config);
  return with_invariance([&] {
    const PairClassification c = classify_invariant_pair(f, pencil);
    Outcome o;
    o.json = {{"class", to_json(c.shape)}, {"summary", describe(c.shape)}, {"verdict", to_string(c.verdict)}};
    o.text = describe(c.shape) + "\nverdict: " + to_string(c.verdict) + "\n";
    o.status = c.verdict == Verdict::TheoremViolation ? kNegative : kOk;
    return o;
  });
}

Outcome verify_family(const TheoremFamilySpec& spec, const Config& config) {
  Outcome o;
  const auto [f, pencil] = generate_theorem_family(spec, config);
  const PairVerdict v = pair_verdict(f, pencil);
  o.json = {{"spec", spec.to_string()}, {"map", f.to_string()},
            {"pencil", {pencil.a().to_string(), pencil.b().to_string()}}};
  o.json["verdict"] = v.json;
  const int deg_rfp = v.json["lemma3"]["deg_RfP"].get<int>();
  const bool degree_law = deg_rfp == 3 * (spec.d - 1);
  o.json["deg_RfP_is_3(d-1)"] = degree_law;
  o.text = spec.to_string() + ": f = " + f.to_string() + ", " + v.json["class"].get<std::string>() +
           ", ramification identity " + (v.json["lemma3"]["equal"].get<bool>() ? "exact" : "fails") +
           ", deg R_f^P = " + std::to_string(deg_rfp) + (v.ok && degree_law ? "" : "  [violation]") + "\n";
  o.status = v.ok && degree_law ? kOk : kNegative;
  return o;
}

Outcome generate(const TheoremFamilySpec& spec, bool grid, const Config& config) {
  if (!grid) return verify_family(spec, config);
  Outcome o;
  o.json = Json::array();
  int failures = 0;
  int total = 0;
  for (const auto& s : theorem_family_grid(4, {2, 3}, {1, 2, -1})) {
    if (!s.valid()) continue;
    Outcome one = verify_family(s, config);
    ++total;
    if (one.status != kOk) ++failures;
    o.json.push_back(std::move(one.json));
    o.text += one.text;
  }
  o.text += std::to_string(total - failures) + "/" + std::to_string(total) + " family members verified\n";
  o.status = failures == 0 ? kOk : kNegative;
  return o;
}

Outcome semiconj(const std::string& phi_text, const std::string& gprime_text) {
  const auto p = parse_line_map(phi_text);
  const auto q = parse_line_map(gprime_text);
  const LineEndo phi(p[0], p[1]);
  const LineEndo gprime(q[0], q[1]);
  Outcome o;
  if (const auto g = solve_semiconjugacy(phi, gprime)) {
    o.json = {{"g", {g->g0().to_string(), g->g1().to_string()}}};
    o.text = "g = " + g->to_string() + "\n";
  } else {
    o.json = {{"g", nullptr}};
    o.text = "none\n";
    o.status = kNegative;
  }
  return o;
}

Outcome diophantine(const std::string& kind_name, int k_max, int m_max) {
  const auto kind = parse_diophantine_kind(kind_name);
  if (!kind) throw Error(ErrorKind::Precondition, "unknown kind '" + kind_name + "'");
  Outcome o;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& s : diophantine_solutions(*kind, k_max, m_max)) {
    list.push_back(to_json(s));
    t << (s.k ? "k=" + std::to_string(*s.k) + " " : "") << "m=[";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i) t << (i ? "," : "") << s.multiplicities[i];
    t << "]\n";
  }
  o.json = {{"kind", to_string(*kind)},
            {"k_max", k_max},
            {"m_max", m_max},
            {"pairwise_coprime", requires_coprime(*kind)},
            {"solutions", list}};
  o.text = t.str() + std::to_string(list.size()) + " solution(s)\n";
  return o;
}

Outcome line_audit(const std::string& a, const std::string& b, const std::string& line, const Config& config) {
  const Pencil pencil(parse_form(a, 3), parse_form(b, 3), config);
  LineAudit audit;
  if (line.empty()) {
    audit = pencil.line_audit();
  } else {
    const auto l = parse_line(line);
    audit = pencil.line_audit({l[0], l[1], l[2]});
  }
  Outcome o;
  o.json = to_json(audit);
  o.json["k"] = pencil.k();
  o.json["deg_R_pi"] = pencil.ramification_divisor_pi().degree();
  std::ostringstream t;
  t << "line (" << audit.line[0] << ", " << audit.line[1] << ", " << audit.line[2] << ")\n"
    << "Wronskian " << audit.wronskian << " (degree " << audit.ram_degree << ")\n"
    << "on R_pi: " << audit.on_rpi_degree << ", tangencies t = " << audit.t << "\n"
    << (audit.conclusive ? "" : "inconclusive: a tangency is not simple or meets R_pi\n")
    << "2 = 2k - deg R_pi - t: " << (audit.identity_holds ? "holds" : "fails") << "\n";
  o.text = t.str();
  o.status = audit.conclusive && audit.identity_holds ? kOk : kNegative;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of plane endomorphisms preserving pencils of curves", "pencilkit"};
  app.require_subcommand(1);
  Options opt;
  opt.seed = default_seed();
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_option("--degree-bound", opt.degree_bound, "Largest degree handed to factorization")
      ->check(CLI::Range(4, 1000));
  app.add_option("--seed", opt.seed, "Seed for coordinate changes, sample lines and parameters");

  std::string a, b, map, line, phi, gprime, kind, c_list;
  int k_max = 0, m_max = 0;
  TheoremFamilySpec spec;
  bool swap = false, grid = false;

  auto* cmd_pencil = app.add_subcommand("pencil-info", "Base points, special members, R_pi, e and shape");
  cmd_pencil->add_option("--A", a, "First form")->required();
  cmd_pencil->add_option("--B", b, "Second form")->required();

  auto* cmd_endo = app.add_subcommand("endo-info", "Morphism check and ramification of a plane map");
  cmd_endo->add_option("--map", map, "Map [P:Q:R]")->required();

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--map", map, "Map [P:Q:R]")->required();
    cmd->add_option("--A", a, "First form of the pencil")->required();
    cmd->add_option("--B", b, "Second form of the pencil")->required();
  };
  auto* cmd_inv = app.add_subcommand("invariance", "Decide invariance and compute the induced line map");
  add_pair(cmd_inv);
  auto* cmd_l3 = app.add_subcommand("lemma3", "Check R_f^P + f*R_pi = R_pi + pi*R_g");
  add_pair(cmd_l3);
  auto* cmd_cls = app.add_subcommand("classify", "Classify an invariant pair");
  add_pair(cmd_cls);

  auto* cmd_gen = app.add_subcommand("generate", "Build and verify a normal-form family member");
  cmd_gen->set_help_flag("--help", "Print this help message and exit");
  cmd_gen->add_option("--d", spec.d, "Degree of the map");
  cmd_gen->add_option("--k", spec.k, "Degree of the pencil");
  cmd_gen->add_option("--h", spec.h, "Exponent of x in the pencil");
  cmd_gen->add_option("--l", spec.l, "Number of factors z^k + c_i x^h y^(k-h)");
  cmd_gen->add_option("--c", c_list, "Comma-separated nonzero rationals c_i");
  cmd_gen->add_flag("--swap", swap, "Use [y^d : x^d : R]");
  cmd_gen->add_flag("--grid", grid, "Verify the whole grid d <= 4, k in {2,3}, c_i in {1,2,-1}");

  auto* cmd_semi = app.add_subcommand("semiconj", "Solve phi o g' = g o phi for g");
  cmd_semi->add_option("--phi", phi, "Line map [phi0:phi1]")->required();
  cmd_semi->add_option("--gprime", gprime, "Line map [g0':g1']")->required();

  auto* cmd_dio = app.add_subcommand("diophantine", "Enumerate multiplicity equations");
  cmd_dio->add_option("--kind", kind, "section2 | twoline | threeline")->required();
  cmd_dio->add_option("--kmax", k_max, "Largest k")->default_val(100);
  cmd_dio->add_option("--mmax", m_max, "Largest multiplicity")->default_val(100);

  auto* cmd_audit = app.add_subcommand("line-audit", "Restrict the pencil to a line and count tangencies");
  cmd_audit->add_option("--A", a, "First form")->required();
  cmd_audit->add_option("--B", b, "Second form")->required();
  cmd_audit->add_option("--line", line, "Three linear forms in u, v, e.g. \"u,u+v,v\"");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const Config config{opt.degree_bound, opt.seed};
  Outcome o;
  try {
    if (*cmd_pencil) {
      o = pencil_info(a, b, config);
    } else if (*cmd_endo) {
      o = endo_info(map, config);
    } else if (*cmd_inv) {
      o = invariance(map, a, b, config);
    } else if (*cmd_l3) {
      o = lemma3(map, a, b, config);
    } else if (*cmd_cls) {
      o = classify(map, a, b, config);
    } else if (*cmd_gen) {
      spec.c = parse_scalar_list(c_list);
      spec.swap = swap;
      o = generate(spec, grid, config);
    } else if (*cmd_semi) {
      o = semiconj(phi, gprime);
    } else if (*cmd_dio) {
      o = diophantine(kind, k_max, m_max);
    } else if (*cmd_audit) {
      o = line_audit(a, b, line, config);
    }
  } catch (const Error& e) {
    Json error{{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
      error["offset"] = s->offset();
      error["length"] = s->length();
    }
    if (opt.json) {
      out << Json{{"seed", seed_text(opt.seed)}, {"error", error}}.dump(2) << "\n";
    }
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kInputError;
  }

  if (opt.json) {
    Json doc{{"seed", seed_text(opt.seed)}};
    if (o.json.is_object()) {
      for (auto& [key, value] : o.json.items()) doc[key] = value;
    } else {
      doc["results"] = o.json;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << o.text << "seed: " << seed_text(opt.seed) << "\n";
  }
  return o.status;
}

}  // namespace pk
