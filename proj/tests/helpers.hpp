#pragma once

#include <string>

#include "pencilkit/divisor.hpp"
#include "pencilkit/endo.hpp"
#include "pencilkit/gcd.hpp"
#include "pencilkit/parse.hpp"
#include "pencilkit/pencil.hpp"

namespace th {

inline pk::MultiPoly P(const std::string& s) { return pk::parse_poly(s, 3); }
inline pk::MultiPoly L(const std::string& s) { return pk::parse_poly(s, 2); }
inline pk::CanonicalForm CF(const std::string& s) { return pk::CanonicalForm(P(s)); }
inline pk::CanonicalForm CL(const std::string& s) { return pk::CanonicalForm(L(s)); }

inline pk::Pencil pencil(const std::string& a, const std::string& b) { return pk::Pencil(P(a), P(b)); }
inline pk::PlaneEndo endo(const std::string& p, const std::string& q, const std::string& r) {
  return pk::PlaneEndo(P(p), P(q), P(r));
}
inline pk::LineEndo line_endo(const std::string& g0, const std::string& g1) { return pk::LineEndo(L(g0), L(g1)); }

/// Plane divisor from (form, multiplicity) pairs written as text.
inline pk::PlaneDivisor divisor(std::initializer_list<std::pair<const char*, int>> entries) {
  pk::PlaneDivisor d;
  for (const auto& [f, m] : entries) d.add(CF(f), m);
  return d;
}
inline pk::LineDivisor line_divisor(std::initializer_list<std::pair<const char*, int>> entries) {
  pk::LineDivisor d;
  for (const auto& [f, m] : entries) d.add(CL(f), m);
  return d;
}

}  // namespace th
