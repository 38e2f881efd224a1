#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencilkit/config.hpp"
#include "pencilkit/divisor.hpp"
#include "pencilkit/endo.hpp"
#include "pencilkit/pencil.hpp"

namespace pk {

/// A o f = sum coeffs0[i] A^i B^(d-i), B o f = sum coeffs1[i] A^i B^(d-i),
/// and g = [sum coeffs0[i] u^i v^(d-i) : sum coeffs1[i] u^i v^(d-i)].
struct InvarianceCertificate {
  LineEndo g;
  std::vector<Scalar> coeffs0;
  std::vector<Scalar> coeffs1;
};

/// Throws NotInvariant when A o f or B o f is not a form in (A, B), and
/// DegreeBoundExceeded when k*d is above the bound.
InvarianceCertificate check_invariance(const PlaneEndo& f, const Pencil& pencil);

/// R_f^P + f*R_pi against R_pi + pi*R_g.
struct LemmaThreeReport {
  PlaneDivisor lhs;
  PlaneDivisor rhs;
  PlaneDivisor r_f;
  PlaneDivisor r_f_pencil;
  PlaneDivisor pullback_r_pi;
  PlaneDivisor r_pi;
  PlaneDivisor pullback_r_g;
  LineDivisor r_g;
  bool equal = false;
  int deg_rfp = 0;
  int e = 0;
  int e_times_dminus1 = 0;
};

/// pi^* of a line divisor: each factor q contributes divisor(q(A, B)).
/// Throws NormConstructionBound when some q(A, B) exceeds the degree bound.
PlaneDivisor pullback_line(const Pencil& pencil, const LineDivisor& d);

LemmaThreeReport verify_lemma3(const PlaneEndo& f, const Pencil& pencil, const InvarianceCertificate& cert);

/// e(P) for a certified pair with d >= 2; throws DichotomyViolation unless
/// it is 2 or 3.
int e_dichotomy(const PlaneEndo& f, const Pencil& pencil);

enum class Verdict {
  TheoremConsistent,
  TheoremViolation,
  /// Generic member reducible over Q: the classification does not apply.
  ReduciblePencil,
};

const char* to_string(Verdict v);

struct PairClassification {
  PencilClass shape;
  Verdict verdict;
};

/// Certifies invariance, then classifies the pencil.
PairClassification classify_invariant_pair(const PlaneEndo& f, const Pencil& pencil);

struct TheoremFamilySpec {
  int d = 2;
  int k = 2;
  int h = 1;
  int l = 0;
  std::vector<Scalar> c;
  bool swap = false;

  /// Throws InvalidFamily. The swapped form requires k = 2h, since only
  /// then does exchanging x and y preserve x^h y^(k-h).
  void validate() const;
  bool valid() const;
  std::string to_string() const;
};

/// Components [x^d : y^d : R] (or swapped) and pencil forms for a spec,
/// without validation; used to exhibit what the swap restriction excludes.
std::array<MultiPoly, 3> family_map_components(const TheoremFamilySpec& spec);
std::array<MultiPoly, 2> family_pencil_forms(const TheoremFamilySpec& spec);

/// Every tuple with 2 <= d <= d_max, k in ks, 0 < h < k coprime to k,
/// 0 <= l <= d/k, c in c_values^l and swap in {false, true}. Tuples whose
/// swap flag is invalid are included; filter with valid().
std::vector<TheoremFamilySpec> theorem_family_grid(int d_max, const std::vector<int>& ks,
                                                   const std::vector<Scalar>& c_values);

/// The pencil [x^h y^(k-h) : z^k] with f = [x^d : y^d : R] (or [y^d : x^d : R]),
/// R = z^(d-kl) prod (z^k + c_i x^h y^(k-h)); invariance is re-verified.
std::pair<PlaneEndo, Pencil> generate_theorem_family(const TheoremFamilySpec& spec, const Config& config = {});

/// f = [P : Q : R] with the pencil [x : y]. P, Q are binary (in x, y or u, v),
/// R ternary; all of degree d. Throws NotCoprime or NotAMorphism.
std::pair<PlaneEndo, Pencil> generate_elementary(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r,
                                                 const Config& config = {});

/// g with phi o g' = g o phi, or nullopt.
std::optional<LineEndo> solve_semiconjugacy(const LineEndo& phi, const LineEndo& gprime);

}  // namespace pk
