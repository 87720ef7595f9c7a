#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starxor/automata.hpp"
#include "starxor/transforms.hpp"

namespace starxor {

/// Sizes (n_1, ..., n_k) and final sets (F_1, ..., F_k) of a k-monster.
struct MonsterSpec {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<State>> finals;

  std::size_t arity() const noexcept { return sizes.size(); }
  /// Throws std::invalid_argument unless k >= 1, sizes are positive and F_j is within [0, n_j).
  void validate() const;
  /// Number of letters, i.e. the product of n_j^n_j; throws ResourceLimitError above `cap`.
  std::uint64_t letter_count(std::uint64_t cap = kDefaultLetterCap) const;
};

/// A letter of a 2-monster: one transformation per component.
struct PairLetter {
  Transformation first;
  Transformation second;

  /// "([i0 ...],[j0 ...])"
  std::string label() const;

  friend bool operator==(const PairLetter&, const PairLetter&) = default;
};

/// Two automata over one shared alphabet of pair letters.
struct DfaPair {
  Dfa first;
  Dfa second;
  std::vector<PairLetter> letters;
};

/// Mon_n^F: states [0, n), initial 0, letter j is the j-th transformation of
/// enumerate_all(n) and acts as itself.
Dfa monster1(std::size_t n, const std::vector<State>& finals,
             std::uint64_t letter_cap = kDefaultLetterCap);

/// The k components of a k-monster; letters are k-tuples enumerated with the
/// first coordinate most significant.
std::vector<Dfa> monster(const MonsterSpec& spec, std::uint64_t letter_cap = kDefaultLetterCap);

/// 2-monster with its pair alphabet in lexicographic (first, second) order.
DfaPair monster2(const MonsterSpec& spec, std::uint64_t letter_cap = kDefaultLetterCap);

/// Position of `pair` in the alphabet of monster2(spec).
std::uint64_t letter_index(const MonsterSpec& spec, const PairLetter& pair);

/// Automata with states [0, n_j) over an explicit pair alphabet: letter l acts
/// as letters[l].first on the first component and letters[l].second on the second.
DfaPair pair_automata(std::size_t n1, const std::vector<State>& finals1, std::size_t n2,
                      const std::vector<State>& finals2, std::vector<PairLetter> letters);

}  // namespace starxor
