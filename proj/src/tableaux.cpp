#include "starxor/tableaux.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace starxor {

namespace {

constexpr std::uint64_t bit(std::uint64_t i) { return std::uint64_t{1} << i; }

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

void check_shape(std::size_t n1, std::size_t n2) {
  if (n1 * n2 > 64) {
    throw std::invalid_argument("tableau of " + std::to_string(n1) + "x" + std::to_string(n2) +
                                " cells does not fit in 64 bits");
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tableau count overflows 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("tableau count overflows 64 bits");
  return r;
}

bool rows_ok(std::uint64_t cells, std::size_t n1, std::size_t n2) {
  const auto row_mask = low_bits(n2);
  for (std::size_t i = 0; i < n1; ++i) {
    const auto ri = (cells >> (i * n2)) & row_mask;
    if (!ri) continue;
    for (std::size_t j = i + 1; j < n1; ++j) {
      const auto rj = (cells >> (j * n2)) & row_mask;
      if (ri != rj && (ri & rj)) return false;
    }
  }
  return true;
}

void check_enumerable(std::size_t cells) {
  if (cells > kExhaustiveCellLimit) {
    throw ResourceLimitError("exhaustive tableau enumeration over " + std::to_string(cells) +
                             " cells exceeds the budget of " +
                             std::to_string(kExhaustiveCellLimit));
  }
}

}  // namespace

Tableau::Tableau(std::size_t n1, std::size_t n2, std::uint64_t cells)
    : n1_(n1), n2_(n2), cells_(cells) {
  check_shape(n1, n2);
  if (cells & ~low_bits(n1 * n2)) throw std::invalid_argument("tableau has cells outside its grid");
}

Tableau Tableau::from_cells(std::size_t n1, std::size_t n2,
                            const std::vector<std::pair<State, State>>& crosses) {
  Tableau t(n1, n2);
  for (auto [x, y] : crosses) t = t.with(x, y);
  return t;
}

bool Tableau::contains(State x, State y) const {
  if (x >= n1_ || y >= n2_) throw std::out_of_range("tableau cell out of range");
  return cells_ & bit(x * n2_ + y);
}

Tableau Tableau::with(State x, State y) const {
  if (x >= n1_ || y >= n2_) throw std::out_of_range("tableau cell out of range");
  return Tableau(n1_, n2_, cells_ | bit(x * n2_ + y));
}

std::size_t Tableau::cross_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(cells_));
}

std::uint64_t Tableau::row(State x) const {
  if (x >= n1_) throw std::out_of_range("tableau row out of range");
  return (cells_ >> (x * n2_)) & low_bits(n2_);
}

bool Tableau::is_subset_of(const Tableau& other) const {
  if (n1_ != other.n1_ || n2_ != other.n2_) throw std::invalid_argument("tableau shapes differ");
  return (cells_ & ~other.cells_) == 0;
}

Tableau Tableau::apply(const PairLetter& letter) const {
  if (letter.first.size() != n1_ || letter.second.size() != n2_) {
    throw std::invalid_argument("letter does not act on this tableau shape");
  }
  std::uint64_t out = 0;
  for (auto rest = cells_; rest; rest &= rest - 1) {
    const auto c = static_cast<std::size_t>(std::countr_zero(rest));
    out |= bit(std::uint64_t{letter.first.images()[c / n2_]} * n2_ + letter.second.images()[c % n2_]);
  }
  return Tableau(n1_, n2_, out);
}

FinalZone::FinalZone(std::size_t n1, std::size_t n2, std::vector<State> f1, std::vector<State> f2)
    : n1_(n1), n2_(n2), f1_(std::move(f1)), f2_(std::move(f2)), mask_(0) {
  check_shape(n1, n2);
  std::vector<bool> in1(n1, false), in2(n2, false);
  for (State x : f1_) {
    if (x >= n1) throw std::invalid_argument("final zone: F1 entry out of range");
    in1[x] = true;
  }
  for (State y : f2_) {
    if (y >= n2) throw std::invalid_argument("final zone: F2 entry out of range");
    in2[y] = true;
  }
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n2; ++y) {
      if (in1[x] != in2[y]) mask_ |= bit(x * n2 + y);
    }
  }
}

FinalZone FinalZone::extremal(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("final zone needs positive sizes");
  return FinalZone(n1, n2, {static_cast<State>(n1 - 1)}, {0});
}

bool FinalZone::contains(State x, State y) const {
  if (x >= n1_ || y >= n2_) throw std::out_of_range("zone cell out of range");
  return mask_ & bit(x * n2_ + y);
}

bool is_final(const Tableau& t, const FinalZone& z) {
  if (t.rows() != z.rows() || t.cols() != z.cols()) {
    throw std::invalid_argument("is_final: tableau and zone shapes differ");
  }
  return (t.cells() & z.mask()) != 0;
}

bool is_accessible_state(const Tableau& t, const FinalZone& z) {
  return !is_final(t, z) || (t.cells() & 1);
}

bool has_right_triangle(const Tableau& t) {
  for (State x = 0; x < t.rows(); ++x) {
    for (State x2 = x + 1; x2 < t.rows(); ++x2) {
      for (State y = 0; y < t.cols(); ++y) {
        for (State y2 = y + 1; y2 < t.cols(); ++y2) {
          const int corners = t.contains(x, y) + t.contains(x, y2) + t.contains(x2, y) +
                              t.contains(x2, y2);
          if (corners == 3) return true;
        }
      }
    }
  }
  return false;
}

bool rows_equal_or_disjoint(const Tableau& t) { return rows_ok(t.cells(), t.rows(), t.cols()); }

Tableau saturate(const Tableau& t) {
  const auto n1 = t.rows(), n2 = t.cols();
  std::vector<std::uint64_t> rows(n1);
  for (State x = 0; x < n1; ++x) rows[x] = t.row(x);
  // (i,j),(i',j),(i,j') in T forces (i',j'): rows sharing a column absorb each other
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t k = 0; k < n1; ++k) {
        if (i == k || !(rows[i] & rows[k]) || rows[i] == rows[k]) continue;
        rows[i] = rows[k] = rows[i] | rows[k];
        changed = true;
      }
    }
  }
  std::uint64_t cells = 0;
  for (std::size_t x = 0; x < n1; ++x) cells |= rows[x] << (x * n2);
  return Tableau(n1, n2, cells);
}

std::uint64_t count_rtf_exhaustive(std::size_t x, std::size_t y, bool pinned) {
  if (x == 0 || y == 0) return pinned ? 0 : 1;
  check_enumerable(x * y);
  std::uint64_t count = 0;
  const std::uint64_t total = bit(x * y);
  for (std::uint64_t m = pinned ? 1 : 0; m < total; m += pinned ? 2 : 1) {
    if (rows_ok(m, x, y)) ++count;
  }
  return count;
}

std::uint64_t count_rtf_profile(std::size_t x, std::size_t y, bool pinned) {
  if (x == 0 || y == 0) return pinned ? 0 : 1;
  if (y > 64) throw std::invalid_argument("row-profile count supports at most 64 columns");
  // binom[a][b] for a <= y
  std::vector<std::vector<std::uint64_t>> binom(y + 1, std::vector<std::uint64_t>(y + 1, 0));
  for (std::size_t a = 0; a <= y; ++a) {
    binom[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = checked_add(binom[a - 1][b - 1], binom[a - 1][b]);
  }
  // Rows come in groups sharing one non-empty column set; the sets of
  // distinct groups are disjoint. State: (groups so far, columns used).
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> ways;
  std::size_t first_row = 0;
  if (pinned) {
    // row 0 opens a group whose column set contains column 0
    for (std::size_t s = 1; s <= y; ++s) ways[{1, s}] = binom[y - 1][s - 1];
    first_row = 1;
  } else {
    ways[{0, 0}] = 1;
  }
  for (std::size_t r = first_row; r < x; ++r) {
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> next;
    for (auto [key, w] : ways) {
      auto [groups, used] = key;
      // empty row, or join one of the existing groups
      next[key] = checked_add(next[key], checked_mul(w, groups + 1));
      for (std::size_t s = 1; s + used <= y; ++s) {
        auto& slot = next[{groups + 1, used + s}];
        slot = checked_add(slot, checked_mul(w, binom[y - used][s]));
      }
    }
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (auto [key, w] : ways) total = checked_add(total, w);
  return total;
}

std::uint64_t count_rtf(std::size_t x, std::size_t y) {
  return x * y <= kExhaustiveCellLimit ? count_rtf_exhaustive(x, y, false)
                                       : count_rtf_profile(x, y, false);
}

std::uint64_t count_rtf_pinned(std::size_t x, std::size_t y) {
  return x * y <= kExhaustiveCellLimit ? count_rtf_exhaustive(x, y, true)
                                       : count_rtf_profile(x, y, true);
}

std::uint64_t predicted_complexity(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("predicted_complexity: sizes must be positive");
  return checked_add(checked_mul(2, count_rtf(n1 - 1, n2 - 1)), count_rtf_pinned(n1, n2));
}

std::uint64_t count_constrained(const FinalZone& z) {
  const auto n1 = z.rows(), n2 = z.cols();
  check_enumerable(n1 * n2);
  std::uint64_t count = 0;
  const std::uint64_t total = bit(n1 * n2);
  for (std::uint64_t m = 0; m < total; ++m) {
    if ((m & z.mask()) && !(m & 1)) continue;
    if (rows_ok(m, n1, n2)) ++count;
  }
  return count;
}

std::string render(const Tableau& t, const FinalZone* zone) {
  if (zone && (zone->rows() != t.rows() || zone->cols() != t.cols())) {
    throw std::invalid_argument("render: zone shape differs from tableau");
  }
  std::ostringstream out;
  for (State x = 0; x < t.rows(); ++x) {
    for (State y = 0; y < t.cols(); ++y) {
      const char* mark = t.contains(x, y) ? "×" : "·";
      if (zone) {
        if (zone->contains(x, y)) {
          out << '[' << mark << ']';
        } else {
          out << ' ' << mark << ' ';
        }
      } else {
        out << (y ? " " : "") << mark;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string counts_csv(std::size_t max_size) {
  std::ostringstream out;
  out << "n1,n2,alpha,alpha_pinned,predicted\n";
  for (std::size_t x = 0; x <= max_size; ++x) {
    for (std::size_t y = 0; y <= max_size; ++y) {
      out << x << ',' << y << ',' << count_rtf(x, y) << ',' << count_rtf_pinned(x, y) << ',';
      if (x > 0 && y > 0) out << predicted_complexity(x, y);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace starxor
