#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starxor/transforms.hpp"

namespace starxor {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Thrown by import_json on malformed or schema-violating input.
class DfaFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complete deterministic automaton over letters 0..letter_count-1.
///
/// The transition table is dense and row-major by state:
/// `delta[q * letter_count + a]` is the successor of q on a. Letters carry no
/// meaning of their own; `letter_labels` are for display and serialization.
class Dfa {
 public:
  Dfa(std::size_t state_count, std::size_t letter_count, State initial,
      std::span<const State> finals, std::vector<State> delta,
      std::vector<std::string> letter_labels = {});

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t letter_count() const noexcept { return letter_count_; }
  State initial() const noexcept { return initial_; }

  bool is_final(State q) const { return final_.at(q); }
  /// Final states in increasing order.
  std::vector<State> finals() const;

  State next(State q, Letter a) const noexcept { return delta_[q * letter_count_ + a]; }
  std::span<const State> row(State q) const noexcept {
    return {delta_.data() + q * letter_count_, letter_count_};
  }
  const std::vector<State>& delta() const noexcept { return delta_; }

  /// The transition function of letter `a` as a transformation of the states.
  Transformation letter_action(Letter a) const;

  const std::vector<std::string>& letter_labels() const noexcept { return letter_labels_; }
  /// Label of `a`, falling back to its index.
  std::string letter_label(Letter a) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t state_count_;
  std::size_t letter_count_;
  State initial_;
  std::vector<bool> final_;
  std::vector<State> delta_;
  std::vector<std::string> letter_labels_;
};

inline constexpr State kUnreachable = std::numeric_limits<State>::max();

struct AccessiblePart {
  Dfa dfa;
  /// old state -> new state, or kUnreachable.
  std::vector<State> remap;
};

/// Restriction to the states reachable from the initial state; new indices
/// follow breadth-first discovery order.
AccessiblePart accessible_part(const Dfa& a);

struct NerodePartition {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  bool same_class(State p, State q) const { return class_of.at(p) == class_of.at(q); }
};

/// Nerode equivalence on all states of `a` by Moore partition refinement.
/// Class indices are assigned in order of first occurrence by state index.
NerodePartition nerode_partition(const Dfa& a);

/// Minimal DFA: accessible part quotiented by the Nerode equivalence.
Dfa minimize(const Dfa& a);

/// Number of states of the minimal DFA of L(a).
std::size_t minimal_state_count(const Dfa& a);

/// Language equality by breadth-first search of the synchronized product.
bool is_equivalent(const Dfa& a, const Dfa& b);

/// DFA over a new alphabet recognizing phi^{-1}(L(a)); phi[new letter] = old letter.
/// Labels are carried over from `a` unless `labels` is given.
Dfa preimage_by_renaming(const Dfa& a, std::span<const Letter> phi,
                         std::vector<std::string> labels = {});

State run(const Dfa& a, std::span<const Letter> word);
State run(const Dfa& a, State from, std::span<const Letter> word);
bool accepts(const Dfa& a, std::span<const Letter> word);

/// Graphviz rendering. `state_labels`, when non-empty, names each state.
std::string export_dot(const Dfa& a, std::span<const std::string> state_labels = {},
                       std::string_view graph_name = "dfa");

/// {letter_count, state_count, initial, finals, delta (rows by state), letter_labels}
std::string export_json(const Dfa& a, int indent = -1);
Dfa import_json(std::string_view text);

}  // namespace starxor
