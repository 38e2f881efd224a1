#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pk {

/// Which multiplicity equation to enumerate:
///   SectionTwo  sum(1 - 1/m_j) = 2 - 3/k, m_j pairwise coprime
///   TwoLine     sum(1 - 1/m_j) = 1 - 1/k, m_j pairwise coprime
///   ThreeLine   sum(1 - 1/m_j) = 1, no coprimality and no k
enum class DiophantineKind { SectionTwo, TwoLine, ThreeLine };

const char* to_string(DiophantineKind kind);
std::optional<DiophantineKind> parse_diophantine_kind(const std::string& name);
bool requires_coprime(DiophantineKind kind);

struct DiophantineSolution {
  std::optional<int> k;
  std::vector<int> multiplicities;  // sorted, each >= 2

  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

/// All solutions with 2 <= k <= k_max and m_j <= m_max, ordered by k then
/// multiplicities. Throws Precondition when a bound is below 2.
std::vector<DiophantineSolution> diophantine_solutions(DiophantineKind kind, int k_max, int m_max);

}  // namespace pk
