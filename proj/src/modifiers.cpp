#include "starxor/modifiers.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace starxor {

namespace {

constexpr std::uint64_t bit(std::uint64_t i) { return std::uint64_t{1} << i; }

std::string subset_label(std::uint64_t key, const std::function<std::string(unsigned)>& name) {
  if (key == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (unsigned q = 0; q < 64; ++q) {
    if (!(key & bit(q))) continue;
    if (!first) out += ",";
    out += name(q);
    first = false;
  }
  return out + "}";
}

std::uint64_t subset_key_count(std::size_t n) {
  if (n >= 64) throw ResourceLimitError("subset construction over more than 63 states");
  return bit(n);
}

}  // namespace

StateConfig StateConfig::of(const Dfa& a) {
  StateConfig c;
  c.state_count = a.state_count();
  c.initial = a.initial();
  c.finals.assign(a.state_count(), false);
  for (State f : a.finals()) c.finals[f] = true;
  return c;
}

std::uint64_t StateConfig::final_mask() const {
  if (state_count > 64) throw ResourceLimitError("state configuration wider than 64 states");
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < state_count; ++q) {
    if (finals[q]) mask |= bit(q);
  }
  return mask;
}

std::vector<std::string> ModifiedDfa::state_labels(const Modifier& m) const {
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(m.key_label(k));
  return out;
}

ModifiedDfa apply_modifier(const Modifier& m, std::span<const Dfa> operands,
                           const ConstructionOptions& options) {
  if (operands.size() != m.arity()) {
    throw std::invalid_argument("apply_modifier: expected " + std::to_string(m.arity()) +
                                " operands, got " + std::to_string(operands.size()));
  }
  const auto letter_count = operands.front().letter_count();
  for (const auto& op : operands) {
    if (op.letter_count() != letter_count) {
      throw std::invalid_argument("apply_modifier: operands have different alphabets");
    }
  }
  std::vector<std::string> labels = operands.front().letter_labels();

  // The only access to operand transitions: each letter's action per operand.
  std::vector<std::vector<Transformation>> actions(letter_count);
  for (Letter l = 0; l < letter_count; ++l) {
    actions[l].reserve(operands.size());
    for (const auto& op : operands) actions[l].push_back(op.letter_action(l));
  }

  std::vector<std::uint64_t> keys;
  std::vector<State> delta;
  State initial = 0;

  if (options.materialize == Materialize::all) {
    const auto count = m.key_count();
    if (count > options.state_cap) {
      throw ResourceLimitError("modifier has " + std::to_string(count) +
                               " states, above the state cap of " +
                               std::to_string(options.state_cap));
    }
    keys.resize(count);
    delta.resize(count * letter_count);
    for (std::uint64_t k = 0; k < count; ++k) {
      keys[k] = k;
      for (Letter l = 0; l < letter_count; ++l) {
        const auto target = m.next_key(k, actions[l]);
        if (target >= count) throw std::logic_error("modifier produced an out-of-range key");
        delta[k * letter_count + l] = static_cast<State>(target);
      }
    }
    initial = static_cast<State>(m.initial_key());
  } else {
    std::unordered_map<std::uint64_t, State> index;
    auto intern = [&](std::uint64_t key) {
      auto [it, inserted] = index.try_emplace(key, static_cast<State>(keys.size()));
      if (inserted) {
        if (keys.size() >= options.state_cap) {
          throw ResourceLimitError("modifier exceeds the state cap of " +
                                   std::to_string(options.state_cap));
        }
        keys.push_back(key);
      }
      return it->second;
    };
    intern(m.initial_key());
    for (std::size_t head = 0; head < keys.size(); ++head) {
      const auto key = keys[head];
      for (Letter l = 0; l < letter_count; ++l) delta.push_back(intern(m.next_key(key, actions[l])));
    }
  }

  std::vector<State> finals;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    if (m.is_final_key(keys[s])) finals.push_back(static_cast<State>(s));
  }
  Dfa dfa(keys.size(), letter_count, initial, finals, std::move(delta), std::move(labels));
  return {std::move(dfa), std::move(keys)};
}

StarModifier::StarModifier(StateConfig config)
    : config_(std::move(config)), final_mask_(config_.final_mask()) {
  subset_key_count(config_.state_count);
}

std::uint64_t StarModifier::key_count() const { return subset_key_count(config_.state_count); }

bool StarModifier::is_final_key(std::uint64_t key) const {
  return key == 0 || (key & final_mask_) != 0;
}

std::uint64_t StarModifier::next_key(std::uint64_t key,
                                     std::span<const Transformation> actions) const {
  const auto& act = actions[0];
  const State i = config_.initial;
  if (key == 0) {
    const State target = act.images()[i];
    return config_.finals[target] ? (bit(target) | bit(i)) : bit(target);
  }
  std::uint64_t image = 0;
  for (auto rest = key; rest; rest &= rest - 1) {
    image |= bit(act.images()[std::countr_zero(rest)]);
  }
  return (image & final_mask_) ? (image | bit(i)) : image;
}

std::string StarModifier::key_label(std::uint64_t key) const {
  return subset_label(key, [](unsigned q) { return std::to_string(q); });
}

XorModifier::XorModifier(StateConfig left, StateConfig right)
    : left_(std::move(left)), right_(std::move(right)) {}

std::uint64_t XorModifier::key_count() const {
  return std::uint64_t{left_.state_count} * right_.state_count;
}

std::uint64_t XorModifier::initial_key() const {
  return std::uint64_t{left_.initial} * right_.state_count + right_.initial;
}

bool XorModifier::is_final_key(std::uint64_t key) const {
  const auto x = key / right_.state_count, y = key % right_.state_count;
  return left_.finals[x] != right_.finals[y];
}

std::uint64_t XorModifier::next_key(std::uint64_t key,
                                    std::span<const Transformation> actions) const {
  const auto x = static_cast<State>(key / right_.state_count);
  const auto y = static_cast<State>(key % right_.state_count);
  return std::uint64_t{actions[0].images()[x]} * right_.state_count + actions[1].images()[y];
}

std::string XorModifier::key_label(std::uint64_t key) const {
  return "(" + std::to_string(key / right_.state_count) + "," +
         std::to_string(key % right_.state_count) + ")";
}

StxModifier::StxModifier(StateConfig left, StateConfig right)
    : n1_(left.state_count), n2_(right.state_count) {
  subset_key_count(n1_ * n2_);
  initial_cell_ = std::uint64_t{left.initial} * n2_ + right.initial;
  zone_ = 0;
  for (std::size_t x = 0; x < n1_; ++x) {
    for (std::size_t y = 0; y < n2_; ++y) {
      if (left.finals[x] != right.finals[y]) zone_ |= bit(x * n2_ + y);
    }
  }
}

std::uint64_t StxModifier::key_count() const { return subset_key_count(n1_ * n2_); }

bool StxModifier::is_final_key(std::uint64_t key) const {
  return key == 0 || (key & zone_) != 0;
}

std::uint64_t StxModifier::next_key(std::uint64_t key,
                                    std::span<const Transformation> actions) const {
  const auto& f = actions[0].images();
  const auto& g = actions[1].images();
  if (key == 0) {
    const auto x = initial_cell_ / n2_, y = initial_cell_ % n2_;
    const auto cell = bit(std::uint64_t{f[x]} * n2_ + g[y]);
    return (cell & zone_) ? (cell | bit(initial_cell_)) : cell;
  }
  std::uint64_t image = 0;
  for (auto rest = key; rest; rest &= rest - 1) {
    const auto c = static_cast<std::size_t>(std::countr_zero(rest));
    image |= bit(std::uint64_t{f[c / n2_]} * n2_ + g[c % n2_]);
  }
  return (image & zone_) ? (image | bit(initial_cell_)) : image;
}

std::string StxModifier::key_label(std::uint64_t key) const {
  const auto n2 = n2_;
  return subset_label(key, [n2](unsigned c) {
    return "(" + std::to_string(c / n2) + "," + std::to_string(c % n2) + ")";
  });
}

ModifiedDfa star_modifier(const Dfa& a, const ConstructionOptions& options) {
  const StarModifier m(StateConfig::of(a));
  return apply_modifier(m, std::span<const Dfa>(&a, 1), options);
}

ModifiedDfa xor_modifier(const Dfa& a, const Dfa& b) {
  const XorModifier m(StateConfig::of(a), StateConfig::of(b));
  const std::vector<Dfa> operands{a, b};
  return apply_modifier(m, operands, {Materialize::all, UINT64_MAX});
}

ModifiedDfa stx(const Dfa& a, const Dfa& b, const ConstructionOptions& options) {
  const StxModifier m(StateConfig::of(a), StateConfig::of(b));
  const std::vector<Dfa> operands{a, b};
  return apply_modifier(m, operands, options);
}

ModifiedDfa stx_composed(const Dfa& a, const Dfa& b, const ConstructionOptions& options) {
  return star_modifier(xor_modifier(a, b).dfa, options);
}

std::size_t minimized_stx_size(const Dfa& a, const Dfa& b, std::uint64_t state_cap) {
  return minimal_state_count(stx(a, b, {Materialize::accessible, state_cap}).dfa);
}

DfaOperation star_operation() {
  return [](std::span<const Dfa> ops) {
    if (ops.size() != 1) throw std::invalid_argument("star operation is unary");
    return star_modifier(ops[0]).dfa;
  };
}

DfaOperation xor_operation() {
  return [](std::span<const Dfa> ops) {
    if (ops.size() != 2) throw std::invalid_argument("xor operation is binary");
    return xor_modifier(ops[0], ops[1]).dfa;
  };
}

DfaOperation stx_operation() {
  return [](std::span<const Dfa> ops) {
    if (ops.size() != 2) throw std::invalid_argument("stx operation is binary");
    return stx(ops[0], ops[1]).dfa;
  };
}

bool check_1_uniformity(const DfaOperation& op, std::span<const Dfa> operands,
                        std::span<const Letter> phi) {
  std::vector<Dfa> renamed;
  renamed.reserve(operands.size());
  for (const auto& a : operands) renamed.push_back(preimage_by_renaming(a, phi));
  const Dfa lhs = op(renamed);
  const Dfa rhs = preimage_by_renaming(op(operands), phi);
  return is_equivalent(lhs, rhs);
}

}  // namespace starxor
