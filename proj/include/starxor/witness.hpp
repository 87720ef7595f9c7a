#pragma once

#include <string>
#include <vector>

#include "starxor/monsters.hpp"
#include "starxor/report.hpp"

namespace starxor {

/// The 17-letter alphabet of cycles, transpositions and point maps.
///
/// Letters appear in a fixed order, and `names` gives a readable name for
/// each. For small n1, n2 some letters collapse to the identity or coincide;
/// they are kept so that letter positions never shift.
struct SigmaPrime {
  std::size_t n1 = 0, n2 = 0;
  std::vector<PairLetter> letters;
  std::vector<std::string> names;
};

inline constexpr std::size_t kSigmaPrimeSize = 17;

SigmaPrime sigma_prime(std::size_t n1, std::size_t n2);

/// B1, B2: the ({n1-1}, {0}) 2-monster restricted to sigma_prime(n1, n2).
DfaPair witness_pair(std::size_t n1, std::size_t n2);

/// The same restriction obtained by building monster2 and renaming through
/// letter_index; only feasible while the full alphabet fits under `letter_cap`.
DfaPair witness_pair_by_lookup(std::size_t n1, std::size_t n2,
                               std::uint64_t letter_cap = kDefaultLetterCap);

/// Minimizes stx(B1, B2) and compares with predicted_complexity(n1, n2).
/// A construction above `state_cap` yields a skipped report.
ExperimentReport verify_witness(std::size_t n1, std::size_t n2,
                                std::uint64_t state_cap = kDefaultStateCap);

}  // namespace starxor
