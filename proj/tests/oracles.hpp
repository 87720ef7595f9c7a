#pragma once
// Slow, independent reference implementations used only by the tests.
// They read a Dfa through next()/is_final()/initial() and share no code with
// the constructions under test.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "starxor/automata.hpp"

namespace oracle {

using starxor::Dfa;
using starxor::Letter;
using starxor::State;

using Cell = std::pair<State, State>;
using CellSet = std::set<Cell>;

// Table-filling (Myhill-Nerode) on the reachable states; returns the number
// of distinguishability classes among them.
inline std::size_t minimal_size(const Dfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> reach{a.initial()};
  seen[a.initial()] = true;
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (Letter c = 0; c < a.letter_count(); ++c) {
      State r = a.next(reach[i], c);
      if (!seen[r]) seen[r] = true, reach.push_back(r);
    }
  std::size_t m = reach.size();
  std::map<State, std::size_t> idx;
  for (std::size_t i = 0; i < m; ++i) idx[reach[i]] = i;

  std::vector<std::vector<bool>> dist(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dist[i][j] = a.is_final(reach[i]) != a.is_final(reach[j]);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (dist[i][j]) continue;
        for (Letter c = 0; c < a.letter_count(); ++c) {
          auto p = idx[a.next(reach[i], c)], q = idx[a.next(reach[j], c)];
          if (dist[p][q]) {
            dist[i][j] = dist[j][i] = true;
            changed = true;
            break;
          }
        }
      }
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < m; ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j) fresh = dist[i][j];
    classes += fresh;
  }
  return classes;
}

// Table-filling pairwise relation on every state, reachable or not.
inline std::vector<std::vector<bool>> equivalent_pairs(const Dfa& a) {
  std::size_t n = a.state_count();
  std::vector<std::vector<bool>> dist(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = a.is_final(i) != a.is_final(j);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (dist[i][j]) continue;
        for (Letter c = 0; c < a.letter_count(); ++c)
          if (dist[a.next(i, c)][a.next(j, c)]) {
            dist[i][j] = dist[j][i] = true;
            changed = true;
            break;
          }
      }
  }
  for (auto& row : dist) row.flip();
  return dist;
}

// Star of the xor product as an explicit set construction over pairs.
// Returns the automaton over reachable sets (initial = empty set) and the
// sets themselves in discovery order.
struct SetDfa {
  Dfa dfa;
  std::vector<CellSet> states;
};

inline SetDfa star_xor(const Dfa& a, const Dfa& b) {
  const std::size_t k = a.letter_count();
  auto final_cell = [&](const Cell& c) { return a.is_final(c.first) != b.is_final(c.second); };
  const Cell start{a.initial(), b.initial()};

  std::map<CellSet, State> id;
  std::vector<CellSet> states{CellSet{}};
  id[CellSet{}] = 0;
  std::vector<State> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Letter c = 0; c < k; ++c) {
      CellSet src = states[i];
      if (src.empty()) src.insert(start);
      CellSet dst;
      bool hit = false;
      for (const auto& [x, y] : src) {
        Cell d{a.next(x, c), b.next(y, c)};
        dst.insert(d);
        hit = hit || final_cell(d);
      }
      if (hit) dst.insert(start);
      auto [it, fresh] = id.emplace(dst, static_cast<State>(states.size()));
      if (fresh) states.push_back(dst);
      delta.push_back(it->second);
    }
  }
  std::vector<State> finals;
  for (std::size_t i = 0; i < states.size(); ++i) {
    bool fin = states[i].empty();
    for (const auto& c : states[i]) fin = fin || final_cell(c);
    if (fin) finals.push_back(static_cast<State>(i));
  }
  return {Dfa(states.size(), k, 0, finals, std::move(delta)), std::move(states)};
}

inline bool accepts(const Dfa& a, const std::vector<Letter>& w, std::size_t lo, std::size_t hi) {
  State q = a.initial();
  for (std::size_t i = lo; i < hi; ++i) q = a.next(q, w[i]);
  return a.is_final(q);
}

// w in L*, by dynamic programming over split points.
inline bool in_star(const Dfa& a, const std::vector<Letter>& w) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (std::size_t j = 1; j <= w.size(); ++j)
    for (std::size_t i = 0; i < j && !ok[j]; ++i) ok[j] = ok[i] && accepts(a, w, i, j);
  return ok[w.size()];
}

inline bool in_xor(const Dfa& a, const Dfa& b, const std::vector<Letter>& w) {
  return accepts(a, w, 0, w.size()) != accepts(b, w, 0, w.size());
}

// w in (L(a) xor L(b))*.
inline bool in_star_xor(const Dfa& a, const Dfa& b, const std::vector<Letter>& w) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (std::size_t j = 1; j <= w.size(); ++j)
    for (std::size_t i = 0; i < j && !ok[j]; ++i) {
      if (!ok[i]) continue;
      ok[j] = accepts(a, w, i, j) != accepts(b, w, i, j);
    }
  return ok[w.size()];
}

// All words of length <= max_len over k letters, shortest first.
inline std::vector<std::vector<Letter>> words(std::size_t k, std::size_t max_len) {
  std::vector<std::vector<Letter>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (Letter c = 0; c < k; ++c) {
      auto w = out[i];
      w.push_back(c);
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Right triangle by brute force over all row and column pairs, reading the
// grid as a set of cells.
inline bool right_triangle(const CellSet& t, std::size_t n1, std::size_t n2) {
  for (State x = 0; x < n1; ++x)
    for (State x2 = x + 1; x2 < n1; ++x2)
      for (State y = 0; y < n2; ++y)
        for (State y2 = y + 1; y2 < n2; ++y2) {
          int corners = t.count({x, y}) + t.count({x, y2}) + t.count({x2, y}) + t.count({x2, y2});
          if (corners == 3) return true;
        }
  return false;
}

inline CellSet cells_of(std::uint64_t mask, std::size_t n2) {
  CellSet s;
  for (std::uint64_t bit = 0; bit < 64; ++bit)
    if (mask >> bit & 1) s.insert({static_cast<State>(bit / n2), static_cast<State>(bit % n2)});
  return s;
}

// Closure under "three corners of a rectangle force the fourth".
inline CellSet close_rectangles(CellSet t, std::size_t n1, std::size_t n2) {
  for (bool grew = true; grew;) {
    grew = false;
    for (State x = 0; x < n1; ++x)
      for (State x2 = 0; x2 < n1; ++x2)
        for (State y = 0; y < n2; ++y)
          for (State y2 = 0; y2 < n2; ++y2)
            if (x != x2 && y != y2 && t.count({x, y}) && t.count({x, y2}) && t.count({x2, y}) &&
                !t.count({x2, y2})) {
              t.insert({x2, y2});
              grew = true;
            }
  }
  return t;
}

// Uniform random complete DFA.
inline Dfa random_dfa(std::mt19937& rng, std::size_t states, std::size_t letters) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(states - 1));
  std::bernoulli_distribution coin(0.5);
  std::vector<State> delta(states * letters);
  for (auto& d : delta) d = pick(rng);
  std::vector<State> finals;
  for (State q = 0; q < states; ++q)
    if (coin(rng)) finals.push_back(q);
  return Dfa(states, letters, pick(rng), finals, std::move(delta));
}

inline std::vector<Letter> random_renaming(std::mt19937& rng, std::size_t new_letters,
                                           std::size_t old_letters) {
  std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(old_letters - 1));
  std::vector<Letter> phi(new_letters);
  for (auto& p : phi) p = pick(rng);
  return phi;
}

}  // namespace oracle
