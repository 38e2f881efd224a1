#include "pencilkit/divisor.hpp"

namespace pk {

namespace {

template <int Arity>
Divisor<Arity> divisor_from(const MultiPoly& p, const Config& config) {
  if (p.arity() != Arity) throw Error(ErrorKind::ArityMismatch, "divisor_of: wrong arity");
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "divisor_of: zero polynomial");
  if (!p.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "divisor_of: form is not homogeneous");
  Divisor<Arity> d;
  for (const auto& [f, m] : factor(p, config).factors) d.add(f, m);
  return d;
}

bool divides_monomial(const Exponents& big, const Exponents& small) {
  return big[0] >= small[0] && big[1] >= small[1] && big[2] >= small[2];
}

}  // namespace

PlaneDivisor plane_divisor_of(const MultiPoly& p, const Config& config) {
  return divisor_from<3>(p, config);
}

LineDivisor line_divisor_of(const MultiPoly& p, const Config& config) {
  return divisor_from<2>(p, config);
}

MultiPoly normal_form(const MultiPoly& p, const MultiPoly& c) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroInput, "normal_form: zero divisor");
  if (p.arity() != c.arity()) throw Error(ErrorKind::ArityMismatch, "normal_form: arity mismatch");
  const auto& [lead_e, lead_c] = c.leading_term();
  MultiPoly work = p;
  MultiPoly remainder(p.arity());
  while (!work.is_zero()) {
    const auto [e, coef] = work.leading_term();
    if (divides_monomial(e, lead_e)) {
      const Exponents shift{e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]};
      work -= MultiPoly::monomial(p.arity(), shift, coef / lead_c) * c;
    } else {
      remainder.add_term(e, coef);
      work.add_term(e, -coef);
    }
  }
  return remainder;
}

}  // namespace pk
