#include "starxor/monsters.hpp"

#include <stdexcept>

namespace starxor {

namespace {

Dfa component_dfa(std::size_t n, const std::vector<State>& finals,
                  const std::vector<Transformation>& actions,
                  std::vector<std::string> labels) {
  const auto k = actions.size();
  std::vector<State> delta(n * k);
  for (std::size_t l = 0; l < k; ++l) {
    if (actions[l].size() != n) {
      throw std::invalid_argument("letter acts on " + std::to_string(actions[l].size()) +
                                  " states, component has " + std::to_string(n));
    }
    for (std::size_t q = 0; q < n; ++q) delta[q * k + l] = actions[l].images()[q];
  }
  return Dfa(n, k, 0, finals, std::move(delta), std::move(labels));
}

}  // namespace

void MonsterSpec::validate() const {
  if (sizes.empty()) throw std::invalid_argument("MonsterSpec: arity must be at least 1");
  if (finals.size() != sizes.size()) {
    throw std::invalid_argument("MonsterSpec: need one final set per component");
  }
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (sizes[j] == 0) throw std::invalid_argument("MonsterSpec: sizes must be positive");
    for (State f : finals[j]) {
      if (f >= sizes[j]) {
        throw std::invalid_argument("MonsterSpec: final state " + std::to_string(f) +
                                    " out of range for component " + std::to_string(j));
      }
    }
  }
}

std::uint64_t MonsterSpec::letter_count(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (auto n : sizes) {
    const auto factor = bounded_power(n, n, cap);
    if (total > cap / factor) {
      throw ResourceLimitError("monster alphabet exceeds the letter cap of " + std::to_string(cap));
    }
    total *= factor;
  }
  return total;
}

std::string PairLetter::label() const {
  return "(" + first.to_string() + "," + second.to_string() + ")";
}

Dfa monster1(std::size_t n, const std::vector<State>& finals, std::uint64_t letter_cap) {
  MonsterSpec{{n}, {finals}}.validate();
  auto letters = enumerate_all(n, letter_cap);
  std::vector<std::string> labels;
  labels.reserve(letters.size());
  for (const auto& t : letters) labels.push_back(t.to_string());
  return component_dfa(n, finals, letters, std::move(labels));
}

std::vector<Dfa> monster(const MonsterSpec& spec, std::uint64_t letter_cap) {
  spec.validate();
  const auto total = spec.letter_count(letter_cap);
  const auto k = spec.arity();
  std::vector<std::vector<Transformation>> per_component;
  per_component.reserve(k);
  for (auto n : spec.sizes) per_component.push_back(enumerate_all(n, letter_cap));

  std::vector<std::string> labels(total);
  std::vector<std::vector<Transformation>> actions(k);
  for (auto& a : actions) a.reserve(total);
  std::vector<std::size_t> digits(k, 0);
  for (std::uint64_t l = 0; l < total; ++l) {
    std::string label = "(";
    for (std::size_t j = 0; j < k; ++j) {
      const auto& t = per_component[j][digits[j]];
      actions[j].push_back(t);
      if (j) label += ",";
      label += t.to_string();
    }
    labels[l] = label + ")";
    for (std::size_t j = k; j-- > 0;) {
      if (++digits[j] < per_component[j].size()) break;
      digits[j] = 0;
    }
  }
  std::vector<Dfa> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    out.push_back(component_dfa(spec.sizes[j], spec.finals[j], actions[j], labels));
  }
  return out;
}

DfaPair monster2(const MonsterSpec& spec, std::uint64_t letter_cap) {
  if (spec.arity() != 2) throw std::invalid_argument("monster2: spec must have arity 2");
  spec.validate();
  spec.letter_count(letter_cap);
  const auto left = enumerate_all(spec.sizes[0], letter_cap);
  const auto right = enumerate_all(spec.sizes[1], letter_cap);
  std::vector<PairLetter> letters;
  letters.reserve(left.size() * right.size());
  for (const auto& f : left) {
    for (const auto& g : right) letters.push_back({f, g});
  }
  return pair_automata(spec.sizes[0], spec.finals[0], spec.sizes[1], spec.finals[1],
                       std::move(letters));
}

std::uint64_t letter_index(const MonsterSpec& spec, const PairLetter& pair) {
  if (spec.arity() != 2) throw std::invalid_argument("letter_index: spec must have arity 2");
  if (pair.first.size() != spec.sizes[0] || pair.second.size() != spec.sizes[1]) {
    throw std::invalid_argument("letter_index: pair letter does not match monster sizes");
  }
  const auto n2 = spec.sizes[1];
  const auto right_count = bounded_power(n2, n2, UINT64_MAX);
  return pair.first.rank() * right_count + pair.second.rank();
}

DfaPair pair_automata(std::size_t n1, const std::vector<State>& finals1, std::size_t n2,
                      const std::vector<State>& finals2, std::vector<PairLetter> letters) {
  MonsterSpec{{n1, n2}, {finals1, finals2}}.validate();
  if (letters.empty()) throw std::invalid_argument("pair_automata: empty alphabet");
  std::vector<Transformation> left, right;
  std::vector<std::string> labels;
  left.reserve(letters.size());
  right.reserve(letters.size());
  labels.reserve(letters.size());
  for (const auto& p : letters) {
    left.push_back(p.first);
    right.push_back(p.second);
    labels.push_back(p.label());
  }
  auto a = component_dfa(n1, finals1, left, labels);
  auto b = component_dfa(n2, finals2, right, std::move(labels));
  return {std::move(a), std::move(b), std::move(letters)};
}

}  // namespace starxor
