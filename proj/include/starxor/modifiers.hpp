#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "starxor/automata.hpp"
#include "starxor/transforms.hpp"

namespace starxor {

/// The state configuration (Q, i, F) of a DFA.
struct StateConfig {
  std::size_t state_count = 0;
  State initial = 0;
  std::vector<bool> finals;

  static StateConfig of(const Dfa& a);
  std::uint64_t final_mask() const;  // requires state_count <= 64
};

/// A k-ary modifier.
///
/// A modifier is built from the operands' state configurations alone. Its
/// states are 64-bit keys in [0, key_count()), and the successor of a key
/// under a letter is computed from nothing but that letter's transition
/// function in each operand. apply_modifier() is the only place that looks
/// at the operand transition tables, and it hands the modifier one letter's
/// actions at a time.
class Modifier {
 public:
  virtual ~Modifier() = default;

  virtual std::size_t arity() const = 0;
  virtual std::uint64_t key_count() const = 0;
  virtual std::uint64_t initial_key() const = 0;
  virtual bool is_final_key(std::uint64_t key) const = 0;
  /// actions[j] is the letter's transition function in operand j.
  virtual std::uint64_t next_key(std::uint64_t key,
                                 std::span<const Transformation> actions) const = 0;
  virtual std::string key_label(std::uint64_t key) const { return std::to_string(key); }
};

enum class Materialize {
  accessible,  ///< forward closure from the initial key, breadth-first order
  all,         ///< every key in [0, key_count()), ordered by key
};

struct ConstructionOptions {
  Materialize materialize = Materialize::accessible;
  std::uint64_t state_cap = kDefaultStateCap;
};

/// A modifier's output together with the key of every state.
struct ModifiedDfa {
  Dfa dfa;
  std::vector<std::uint64_t> keys;

  std::vector<std::string> state_labels(const Modifier& m) const;
};

ModifiedDfa apply_modifier(const Modifier& m, std::span<const Dfa> operands,
                           const ConstructionOptions& options = {});

/// Subset construction for the Kleene star. Keys are bitmasks over Q (bit q
/// for state q); key 0 is the empty set, which is initial and final.
class StarModifier final : public Modifier {
 public:
  explicit StarModifier(StateConfig config);

  std::size_t arity() const override { return 1; }
  std::uint64_t key_count() const override;
  std::uint64_t initial_key() const override { return 0; }
  bool is_final_key(std::uint64_t key) const override;
  std::uint64_t next_key(std::uint64_t key,
                         std::span<const Transformation> actions) const override;
  std::string key_label(std::uint64_t key) const override;

 private:
  StateConfig config_;
  std::uint64_t final_mask_;
};

/// Product with symmetric-difference finals. Key of (q1, q2) is q1 * |Q2| + q2.
class XorModifier final : public Modifier {
 public:
  XorModifier(StateConfig left, StateConfig right);

  std::size_t arity() const override { return 2; }
  std::uint64_t key_count() const override;
  std::uint64_t initial_key() const override;
  bool is_final_key(std::uint64_t key) const override;
  std::uint64_t next_key(std::uint64_t key,
                         std::span<const Transformation> actions) const override;
  std::string key_label(std::uint64_t key) const override;

 private:
  StateConfig left_, right_;
};

/// Star of the Xor product, written out directly on subsets of Q1 x Q2.
/// Keys are bitmasks over Q1 x Q2 with cell (x, y) at bit x * |Q2| + y, which
/// is the same encoding StarModifier produces over an XorModifier output.
class StxModifier final : public Modifier {
 public:
  StxModifier(StateConfig left, StateConfig right);

  std::size_t arity() const override { return 2; }
  std::uint64_t key_count() const override;
  std::uint64_t initial_key() const override { return 0; }
  bool is_final_key(std::uint64_t key) const override;
  std::uint64_t next_key(std::uint64_t key,
                         std::span<const Transformation> actions) const override;
  std::string key_label(std::uint64_t key) const override;

  std::uint64_t zone_mask() const noexcept { return zone_; }

 private:
  std::size_t n1_, n2_;
  std::uint64_t initial_cell_;
  std::uint64_t zone_;
};

ModifiedDfa star_modifier(const Dfa& a, const ConstructionOptions& options = {});
ModifiedDfa xor_modifier(const Dfa& a, const Dfa& b);
/// Direct construction through StxModifier.
ModifiedDfa stx(const Dfa& a, const Dfa& b, const ConstructionOptions& options = {});
/// star_modifier(xor_modifier(a, b)): the composition of the two modifiers.
ModifiedDfa stx_composed(const Dfa& a, const Dfa& b, const ConstructionOptions& options = {});

/// Number of states of the minimal DFA of L(stx(a, b)).
std::size_t minimized_stx_size(const Dfa& a, const Dfa& b,
                               std::uint64_t state_cap = kDefaultStateCap);

/// A DFA-level operation of any arity, as used by check_1_uniformity.
using DfaOperation = std::function<Dfa(std::span<const Dfa>)>;

DfaOperation star_operation();
DfaOperation xor_operation();
DfaOperation stx_operation();

/// True iff L(op(preimage(a_1, phi), ...)) = phi^{-1}(L(op(a_1, ...))).
bool check_1_uniformity(const DfaOperation& op, std::span<const Dfa> operands,
                        std::span<const Letter> phi);

}  // namespace starxor
