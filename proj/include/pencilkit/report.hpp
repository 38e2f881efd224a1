#pragma once

#include <cstdint>

#include <json.hpp>

#include "pencilkit/diophantine.hpp"
#include "pencilkit/divisor.hpp"
#include "pencilkit/endo.hpp"
#include "pencilkit/invariance.hpp"
#include "pencilkit/pencil.hpp"

namespace pk {

using Json = nlohmann::ordered_json;

Json to_json(const PlaneDivisor& d);
Json to_json(const LineDivisor& d);
Json to_json(const Factorization& f);
Json to_json(const PencilClass& c);
Json to_json(const Mat3& m);
Json to_json(const LineAudit& a);
Json to_json(const DiophantineSolution& s);

Json pencil_report(const Pencil& pencil);
Json endo_report(const PlaneEndo& f, const Config& config);
Json certificate_report(const InvarianceCertificate& cert);
Json lemma3_report(const LemmaThreeReport& r);

/// {invariant, g, lemma3, e, class, violations}: the full verdict on a pair.
struct PairVerdict {
  Json json;
  bool ok = false;  // invariant, ramification identity exact, and no violations
};
PairVerdict pair_verdict(const PlaneEndo& f, const Pencil& pencil);

}  // namespace pk
