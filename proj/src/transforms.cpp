#include "starxor/transforms.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace starxor {

std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && value > limit / base) {
      throw ResourceLimitError("enumeration of " + std::to_string(base) + "^" +
                               std::to_string(exp) + " items exceeds the limit of " +
                               std::to_string(limit));
    }
    value *= base;
  }
  if (value > limit) {
    throw ResourceLimitError("enumeration of " + std::to_string(value) +
                             " items exceeds the limit of " + std::to_string(limit));
  }
  return value;
}

Transformation::Transformation(std::vector<State> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("transformation domain must be non-empty");
  }
  const auto n = images_.size();
  for (State image : images_) {
    if (image >= n) {
      throw std::invalid_argument("transformation image " + std::to_string(image) +
                                  " out of range for domain size " + std::to_string(n));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("identity: domain size must be positive");
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
  return Transformation(std::move(images));
}

Transformation Transformation::cycle(std::size_t n, std::span<const State> support) {
  auto result = identity(n);
  std::vector<bool> seen(n, false);
  for (State q : support) {
    if (q >= n) {
      throw std::invalid_argument("cycle: state " + std::to_string(q) + " out of range");
    }
    if (seen[q]) throw std::invalid_argument("cycle: duplicate state " + std::to_string(q));
    seen[q] = true;
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    result.images_[support[i]] = support[(i + 1) % support.size()];
  }
  return result;
}

Transformation Transformation::point_map(std::size_t n, State from, State to) {
  auto result = identity(n);
  if (from >= n || to >= n) {
    throw std::invalid_argument("point_map: state out of range");
  }
  result.images_[from] = to;
  return result;
}

Transformation Transformation::unrank(std::size_t n, std::uint64_t rank) {
  if (n == 0) throw std::invalid_argument("unrank: domain size must be positive");
  std::vector<State> images(n);
  for (std::size_t i = n; i-- > 0;) {
    images[i] = static_cast<State>(rank % n);
    rank /= n;
  }
  if (rank != 0) throw std::out_of_range("unrank: rank exceeds n^n");
  return Transformation(std::move(images));
}

State Transformation::apply(State q) const {
  if (q >= images_.size()) {
    throw std::out_of_range("transformation applied to state " + std::to_string(q) +
                            " outside its domain");
  }
  return images_[q];
}

bool Transformation::is_identity() const noexcept {
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (images_[q] != q) return false;
  }
  return true;
}

bool Transformation::is_injective() const {
  std::vector<bool> hit(images_.size(), false);
  for (State image : images_) {
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

std::uint64_t Transformation::rank() const {
  const std::uint64_t n = images_.size();
  std::uint64_t r = 0;
  for (State image : images_) {
    if (r > (std::numeric_limits<std::uint64_t>::max() - image) / n) {
      throw std::overflow_error("transformation rank does not fit in 64 bits");
    }
    r = r * n + image;
  }
  return r;
}

std::string Transformation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (q != 0) out << ' ';
    out << images_[q];
  }
  out << ']';
  return out.str();
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("compose: domain sizes differ (" + std::to_string(outer.size()) +
                                " vs " + std::to_string(inner.size()) + ")");
  }
  std::vector<State> images(inner.size());
  for (std::size_t q = 0; q < images.size(); ++q) {
    images[q] = outer.images()[inner.images()[q]];
  }
  return Transformation(std::move(images));
}

std::vector<Transformation> enumerate_all(std::size_t n, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("enumerate_all: domain size must be positive");
  const auto count = bounded_power(n, n, limit);
  std::vector<Transformation> out;
  out.reserve(count);
  std::vector<State> images(n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    out.emplace_back(images);
    // odometer increment, last position fastest
    for (std::size_t i = n; i-- > 0;) {
      if (++images[i] < n) break;
      images[i] = 0;
    }
  }
  return out;
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  std::size_t h = t.size();
  for (State image : t.images()) {
    h ^= std::hash<State>{}(image) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace starxor
