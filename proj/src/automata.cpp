#include "starxor/automata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace starxor {

namespace {

std::string escape_dot(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Dfa::Dfa(std::size_t state_count, std::size_t letter_count, State initial,
         std::span<const State> finals, std::vector<State> delta,
         std::vector<std::string> letter_labels)
    : state_count_(state_count),
      letter_count_(letter_count),
      initial_(initial),
      final_(state_count, false),
      delta_(std::move(delta)),
      letter_labels_(std::move(letter_labels)) {
  if (state_count_ == 0) throw std::invalid_argument("Dfa: state_count must be positive");
  if (letter_count_ == 0) throw std::invalid_argument("Dfa: letter_count must be positive");
  if (state_count_ >= kUnreachable) throw std::invalid_argument("Dfa: too many states");
  if (initial_ >= state_count_) throw std::invalid_argument("Dfa: initial state out of range");
  if (delta_.size() != state_count_ * letter_count_) {
    throw std::invalid_argument("Dfa: transition table has " + std::to_string(delta_.size()) +
                                " entries, expected " +
                                std::to_string(state_count_ * letter_count_));
  }
  for (State target : delta_) {
    if (target >= state_count_) {
      throw std::invalid_argument("Dfa: transition target " + std::to_string(target) +
                                  " out of range");
    }
  }
  for (State f : finals) {
    if (f >= state_count_) {
      throw std::invalid_argument("Dfa: final state " + std::to_string(f) + " out of range");
    }
    final_[f] = true;
  }
  if (!letter_labels_.empty() && letter_labels_.size() != letter_count_) {
    throw std::invalid_argument("Dfa: letter_labels must be empty or have one entry per letter");
  }
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (std::size_t q = 0; q < state_count_; ++q) {
    if (final_[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

Transformation Dfa::letter_action(Letter a) const {
  if (a >= letter_count_) throw std::out_of_range("letter_action: letter out of range");
  std::vector<State> images(state_count_);
  for (std::size_t q = 0; q < state_count_; ++q) images[q] = next(static_cast<State>(q), a);
  return Transformation(std::move(images));
}

std::string Dfa::letter_label(Letter a) const {
  if (a >= letter_count_) throw std::out_of_range("letter_label: letter out of range");
  return letter_labels_.empty() ? std::to_string(a) : letter_labels_[a];
}

AccessiblePart accessible_part(const Dfa& a) {
  std::vector<State> remap(a.state_count(), kUnreachable);
  std::vector<State> order;
  order.reserve(a.state_count());
  remap[a.initial()] = 0;
  order.push_back(a.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (State target : a.row(order[head])) {
      if (remap[target] == kUnreachable) {
        remap[target] = static_cast<State>(order.size());
        order.push_back(target);
      }
    }
  }
  const auto k = a.letter_count();
  std::vector<State> delta(order.size() * k);
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto row = a.row(order[i]);
    for (std::size_t l = 0; l < k; ++l) delta[i * k + l] = remap[row[l]];
    if (a.is_final(order[i])) finals.push_back(static_cast<State>(i));
  }
  return {Dfa(order.size(), k, 0, finals, std::move(delta), a.letter_labels()), std::move(remap)};
}

NerodePartition nerode_partition(const Dfa& a) {
  const auto n = a.state_count();
  const auto k = a.letter_count();
  const auto width = k + 1;
  std::vector<std::size_t> cls(n);
  std::size_t count = 0;
  {
    std::size_t final_class = SIZE_MAX, nonfinal_class = SIZE_MAX;
    for (std::size_t q = 0; q < n; ++q) {
      auto& slot = a.is_final(static_cast<State>(q)) ? final_class : nonfinal_class;
      if (slot == SIZE_MAX) slot = count++;
      cls[q] = slot;
    }
  }
  // Signature of q: its class followed by the classes of its successors.
  std::vector<std::uint32_t> signature(n * width);
  std::vector<std::size_t> order(n), next(n);
  while (true) {
    for (std::size_t q = 0; q < n; ++q) {
      auto* sig = signature.data() + q * width;
      sig[0] = static_cast<std::uint32_t>(cls[q]);
      auto row = a.row(static_cast<State>(q));
      for (std::size_t l = 0; l < k; ++l) sig[l + 1] = static_cast<std::uint32_t>(cls[row[l]]);
    }
    auto sig_of = [&](std::size_t q) {
      return std::span<const std::uint32_t>(signature.data() + q * width, width);
    };
    for (std::size_t q = 0; q < n; ++q) order[q] = q;
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
      auto sp = sig_of(p), sq = sig_of(q);
      return std::lexicographical_compare(sp.begin(), sp.end(), sq.begin(), sq.end());
    });
    // group id per sorted block, then renumber by first occurrence
    std::vector<std::size_t> group(n);
    std::size_t groups = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        auto prev = sig_of(order[i - 1]), cur = sig_of(order[i]);
        if (!std::equal(prev.begin(), prev.end(), cur.begin())) ++groups;
      }
      group[order[i]] = groups;
    }
    ++groups;
    std::vector<std::size_t> renumber(groups, SIZE_MAX);
    std::size_t fresh = 0;
    for (std::size_t q = 0; q < n; ++q) {
      auto& id = renumber[group[q]];
      if (id == SIZE_MAX) id = fresh++;
      next[q] = id;
    }
    cls.swap(next);
    if (groups == count) break;
    count = groups;
  }
  return {std::move(cls), count};
}

Dfa minimize(const Dfa& a) {
  const auto reach = accessible_part(a);
  const Dfa& acc = reach.dfa;
  const auto partition = nerode_partition(acc);
  const auto k = acc.letter_count();
  std::vector<State> delta(partition.class_count * k);
  std::vector<bool> filled(partition.class_count, false);
  std::vector<State> finals;
  for (std::size_t q = 0; q < acc.state_count(); ++q) {
    const auto c = partition.class_of[q];
    if (filled[c]) continue;
    filled[c] = true;
    auto row = acc.row(static_cast<State>(q));
    for (std::size_t l = 0; l < k; ++l) {
      delta[c * k + l] = static_cast<State>(partition.class_of[row[l]]);
    }
    if (acc.is_final(static_cast<State>(q))) finals.push_back(static_cast<State>(c));
  }
  return Dfa(partition.class_count, k, static_cast<State>(partition.class_of[acc.initial()]),
             finals, std::move(delta), acc.letter_labels());
}

std::size_t minimal_state_count(const Dfa& a) {
  return nerode_partition(accessible_part(a).dfa).class_count;
}

bool is_equivalent(const Dfa& a, const Dfa& b) {
  if (a.letter_count() != b.letter_count()) {
    throw std::invalid_argument("is_equivalent: letter counts differ (" +
                                std::to_string(a.letter_count()) + " vs " +
                                std::to_string(b.letter_count()) + ")");
  }
  auto key = [](State p, State q) { return (std::uint64_t{p} << 32) | q; };
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<State, State>> work;
  seen.insert(key(a.initial(), b.initial()));
  work.emplace_back(a.initial(), b.initial());
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    if (a.is_final(p) != b.is_final(q)) return false;
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State np = a.next(p, l), nq = b.next(q, l);
      if (seen.insert(key(np, nq)).second) work.emplace_back(np, nq);
    }
  }
  return true;
}

Dfa preimage_by_renaming(const Dfa& a, std::span<const Letter> phi,
                         std::vector<std::string> labels) {
  if (phi.empty()) throw std::invalid_argument("preimage_by_renaming: empty renaming");
  for (Letter old : phi) {
    if (old >= a.letter_count()) {
      throw std::invalid_argument("preimage_by_renaming: letter " + std::to_string(old) +
                                  " out of range");
    }
  }
  if (labels.empty() && !a.letter_labels().empty()) {
    labels.reserve(phi.size());
    for (Letter old : phi) labels.push_back(a.letter_labels()[old]);
  }
  const auto k = phi.size();
  std::vector<State> delta(a.state_count() * k);
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    for (std::size_t l = 0; l < k; ++l) delta[q * k + l] = a.next(static_cast<State>(q), phi[l]);
  }
  return Dfa(a.state_count(), k, a.initial(), a.finals(), std::move(delta), std::move(labels));
}

State run(const Dfa& a, State from, std::span<const Letter> word) {
  if (from >= a.state_count()) throw std::out_of_range("run: start state out of range");
  State q = from;
  for (Letter l : word) {
    if (l >= a.letter_count()) {
      throw std::out_of_range("run: letter " + std::to_string(l) + " out of range");
    }
    q = a.next(q, l);
  }
  return q;
}

State run(const Dfa& a, std::span<const Letter> word) { return run(a, a.initial(), word); }

bool accepts(const Dfa& a, std::span<const Letter> word) { return a.is_final(run(a, word)); }

std::string export_dot(const Dfa& a, std::span<const std::string> state_labels,
                       std::string_view graph_name) {
  if (!state_labels.empty() && state_labels.size() != a.state_count()) {
    throw std::invalid_argument("export_dot: state_labels size mismatch");
  }
  std::ostringstream out;
  out << "digraph \"" << escape_dot(graph_name) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    out << "  q" << q << " [shape=" << (a.is_final(static_cast<State>(q)) ? "doublecircle" : "circle")
        << ", label=\""
        << escape_dot(state_labels.empty() ? std::to_string(q) : state_labels[q]) << "\"];\n";
  }
  out << "  __start -> q" << a.initial() << ";\n";
  // one edge per (source, target), labels merged
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    std::vector<std::vector<Letter>> by_target(a.state_count());
    auto row = a.row(static_cast<State>(q));
    for (Letter l = 0; l < a.letter_count(); ++l) by_target[row[l]].push_back(l);
    for (std::size_t t = 0; t < a.state_count(); ++t) {
      if (by_target[t].empty()) continue;
      out << "  q" << q << " -> q" << t << " [label=\"";
      for (std::size_t i = 0; i < by_target[t].size(); ++i) {
        if (i) out << ",";
        out << escape_dot(a.letter_label(by_target[t][i]));
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const Dfa& a, int indent) {
  nlohmann::ordered_json j;
  j["letter_count"] = a.letter_count();
  j["state_count"] = a.state_count();
  j["initial"] = a.initial();
  j["finals"] = a.finals();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    auto row = a.row(static_cast<State>(q));
    rows.push_back(std::vector<State>(row.begin(), row.end()));
  }
  j["delta"] = std::move(rows);
  j["letter_labels"] = a.letter_labels();
  return j.dump(indent);
}

Dfa import_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DfaFormatError("malformed DFA JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    const auto letter_count = j.at("letter_count").get<std::size_t>();
    const auto state_count = j.at("state_count").get<std::size_t>();
    const auto initial = j.at("initial").get<State>();
    const auto finals = j.at("finals").get<std::vector<State>>();
    const auto& rows = j.at("delta");
    if (!rows.is_array() || rows.size() != state_count) {
      throw DfaFormatError("DFA JSON: delta must have one row per state");
    }
    std::vector<State> delta;
    delta.reserve(state_count * letter_count);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      auto row = rows[q].get<std::vector<State>>();
      if (row.size() != letter_count) {
        throw DfaFormatError("DFA JSON: delta row " + std::to_string(q) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(letter_count));
      }
      delta.insert(delta.end(), row.begin(), row.end());
    }
    std::vector<std::string> labels;
    if (j.contains("letter_labels")) labels = j.at("letter_labels").get<std::vector<std::string>>();
    return Dfa(state_count, letter_count, initial, finals, std::move(delta), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw DfaFormatError(std::string("DFA JSON schema error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DfaFormatError(std::string("DFA JSON invalid automaton: ") + e.what());
  }
}

}  // namespace starxor
