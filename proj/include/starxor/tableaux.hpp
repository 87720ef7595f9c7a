#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starxor/monsters.hpp"
#include "starxor/transforms.hpp"

namespace starxor {

/// A subset of [0, n1) x [0, n2), drawn as an n1 x n2 grid of crosses.
/// Cell (x, y) is bit x * n2 + y of `cells()`; n1 * n2 must not exceed 64.
class Tableau {
 public:
  Tableau(std::size_t n1, std::size_t n2, std::uint64_t cells = 0);
  static Tableau from_cells(std::size_t n1, std::size_t n2,
                            const std::vector<std::pair<State, State>>& crosses);

  std::size_t rows() const noexcept { return n1_; }
  std::size_t cols() const noexcept { return n2_; }
  std::uint64_t cells() const noexcept { return cells_; }

  bool contains(State x, State y) const;
  Tableau with(State x, State y) const;
  std::size_t cross_count() const noexcept;
  bool empty() const noexcept { return cells_ == 0; }
  /// Row x as a column bitmask.
  std::uint64_t row(State x) const;
  bool is_subset_of(const Tableau& other) const;

  /// (f, g)(T) = {(f(x), g(y)) | (x, y) in T}
  Tableau apply(const PairLetter& letter) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::size_t n1_, n2_;
  std::uint64_t cells_;
};

/// Cells (x, y) with (x in F1) xor (y in F2).
class FinalZone {
 public:
  FinalZone(std::size_t n1, std::size_t n2, std::vector<State> f1, std::vector<State> f2);
  /// The zone of ({n1 - 1}, {0}).
  static FinalZone extremal(std::size_t n1, std::size_t n2);

  std::size_t rows() const noexcept { return n1_; }
  std::size_t cols() const noexcept { return n2_; }
  const std::vector<State>& f1() const noexcept { return f1_; }
  const std::vector<State>& f2() const noexcept { return f2_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(State x, State y) const;

 private:
  std::size_t n1_, n2_;
  std::vector<State> f1_, f2_;
  std::uint64_t mask_;
};

/// t meets the zone. The empty tableau is not final here; the empty start
/// state of the star construction is final for a different reason.
bool is_final(const Tableau& t, const FinalZone& z);

/// A cross in the zone implies a cross at (0, 0).
bool is_accessible_state(const Tableau& t, const FinalZone& z);

/// Some rectangle x != x', y != y' has exactly three of its corners in t.
bool has_right_triangle(const Tableau& t);

/// Every two rows are identical or disjoint.
bool rows_equal_or_disjoint(const Tableau& t);

/// Least right-triangle-free tableau containing t.
Tableau saturate(const Tableau& t);

/// Cap on x * y for exhaustive enumeration of tableaux.
inline constexpr std::size_t kExhaustiveCellLimit = 20;

/// alpha_{x,y}: right-triangle-free x-by-y tableaux. Exhaustive up to
/// kExhaustiveCellLimit cells, row-profile counting beyond.
std::uint64_t count_rtf(std::size_t x, std::size_t y);
/// alpha'_{x,y}: those that contain (0, 0).
std::uint64_t count_rtf_pinned(std::size_t x, std::size_t y);

/// Both counting routes, exposed so they can be checked against each other.
std::uint64_t count_rtf_exhaustive(std::size_t x, std::size_t y, bool pinned);
std::uint64_t count_rtf_profile(std::size_t x, std::size_t y, bool pinned);

/// 2 * alpha_{n1-1, n2-1} + alpha'_{n1, n2}
std::uint64_t predicted_complexity(std::size_t n1, std::size_t n2);

/// Right-triangle-free tableaux t with is_accessible_state(t, z).
std::uint64_t count_constrained(const FinalZone& z);

/// Text grid, one line per row: "×" for a cross and "·" for an empty cell.
/// With a zone, zone cells are bracketed, e.g. "[×]" or "[·]".
std::string render(const Tableau& t, const FinalZone* zone = nullptr);

/// CSV of alpha, alpha' and the predicted complexity for 0 <= n1, n2 <= max_size.
/// Columns: n1,n2,alpha,alpha_pinned,predicted (predicted empty when n1 or n2 is 0).
std::string counts_csv(std::size_t max_size);

}  // namespace starxor
