#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace starxor {

using State = std::uint32_t;

/// Default cap on the number of letters an enumeration may produce.
inline constexpr std::uint64_t kDefaultLetterCap = 1'000'000;
/// Default cap on the number of states a subset construction may produce.
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 22;

/// Thrown when an enumeration or construction would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns base^exp, or throws ResourceLimitError once the value exceeds `limit`.
std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

/// A total mapping of [0, n) into itself, stored as its image sequence.
///
/// The image sequence doubles as the canonical encoding: two transformations
/// are equal iff their images are equal, and the lexicographic order on images
/// is the order used for every alphabet enumeration in this library.
class Transformation {
 public:
  explicit Transformation(std::vector<State> images);

  static Transformation identity(std::size_t n);

  /// Cyclic permutation support[0] -> support[1] -> ... -> support[0].
  /// States outside the support are fixed; a support of length <= 1 gives
  /// the identity.
  static Transformation cycle(std::size_t n, std::span<const State> support);
  static Transformation cycle(std::size_t n, std::initializer_list<State> support) {
    return cycle(n, std::span<const State>(support.begin(), support.size()));
  }

  /// Sends `from` to `to` and fixes every other state.
  static Transformation point_map(std::size_t n, State from, State to);

  /// Inverse of rank(): the transformation at position `rank` of enumerate_all(n).
  static Transformation unrank(std::size_t n, std::uint64_t rank);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<State>& images() const noexcept { return images_; }

  State apply(State q) const;
  State operator()(State q) const { return apply(q); }

  bool is_identity() const noexcept;
  bool is_injective() const;

  /// Position in the lexicographic enumeration of all n^n transformations.
  std::uint64_t rank() const;

  /// "[i0 i1 ... i(n-1)]"
  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> images_;
};

/// q |-> outer(inner(q))
Transformation compose(const Transformation& outer, const Transformation& inner);

/// All n^n transformations of [0, n) in lexicographic order of images.
std::vector<Transformation> enumerate_all(std::size_t n, std::uint64_t limit = kDefaultLetterCap);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

}  // namespace starxor
