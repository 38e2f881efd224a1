#include "pencilkit/diophantine.hpp"

#include <algorithm>
#include <numeric>

#include <gmpxx.h>

#include "pencilkit/errors.hpp"

namespace pk {

const char* to_string(DiophantineKind kind) {
  switch (kind) {
    case DiophantineKind::SectionTwo: return "section2";
    case DiophantineKind::TwoLine: return "twoline";
    case DiophantineKind::ThreeLine: return "threeline";
  }
  return "?";
}

std::optional<DiophantineKind> parse_diophantine_kind(const std::string& name) {
  for (auto kind : {DiophantineKind::SectionTwo, DiophantineKind::TwoLine, DiophantineKind::ThreeLine}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool requires_coprime(DiophantineKind kind) { return kind != DiophantineKind::ThreeLine; }

namespace {

struct Search {
  DiophantineKind kind;
  int k_max;
  int m_max;
  mpq_class bound;  // sums at or above this are hopeless (strict kinds)
  std::vector<int> current;
  std::vector<DiophantineSolution> found;

  void record(const mpq_class& sum) {
    if (kind == DiophantineKind::ThreeLine) {
      if (sum == 1) found.push_back({std::nullopt, current});
      return;
    }
    // 2 - 3/k = sum  or  1 - 1/k = sum
    const mpq_class gap = (kind == DiophantineKind::SectionTwo ? mpq_class(2) : mpq_class(1)) - sum;
    if (sgn(gap) <= 0) return;
    const mpq_class k = (kind == DiophantineKind::SectionTwo ? mpq_class(3) : mpq_class(1)) / gap;
    if (k.get_den() != 1 || k < 2 || k > k_max) return;
    found.push_back({static_cast<int>(k.get_num().get_si()), current});
  }

  bool too_big(const mpq_class& sum) const {
    return kind == DiophantineKind::ThreeLine ? sum > bound : sum >= bound;
  }

  void extend(const mpq_class& sum, int from) {
    for (int m = from; m <= m_max; ++m) {
      const mpq_class next = sum + 1 - mpq_class(1, m);
      // terms grow with m, so the first overshoot ends the loop
      if (too_big(next)) break;
      if (requires_coprime(kind) &&
          std::any_of(current.begin(), current.end(), [m](int x) { return std::gcd(x, m) != 1; })) {
        continue;
      }
      current.push_back(m);
      record(next);
      extend(next, m);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<DiophantineSolution> diophantine_solutions(DiophantineKind kind, int k_max, int m_max) {
  if (m_max < 2 || (kind != DiophantineKind::ThreeLine && k_max < 2)) {
    throw Error(ErrorKind::Precondition, "diophantine: bounds must be at least 2");
  }
  Search s{kind, k_max, m_max, kind == DiophantineKind::SectionTwo ? mpq_class(2) : mpq_class(1), {}, {}};
  s.extend(0, 2);
  std::sort(s.found.begin(), s.found.end(), [](const auto& a, const auto& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.multiplicities < b.multiplicities;
  });
  return s.found;
}

}  // namespace pk
