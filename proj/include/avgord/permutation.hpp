#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avgord/errors.hpp"

namespace avgord {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image sequence.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1) : images_(degree) {
    if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvalidArgument("permutation degree must be at least 1");
    std::vector<bool> hit(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || hit[p]) throw InvalidArgument("image sequence is not a bijection");
      hit[p] = true;
    }
  }

  /// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" or "()" on `degree` points.
  static Permutation from_cycles(std::string_view text, std::size_t degree) {
    Permutation result(degree);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) throw InvalidArgument("empty cycle text");
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidArgument("expected '(' in cycle text '" + std::string(text) + "'");
      ++i;
      std::vector<Point> cycle;
      for (;;) {
        skip_ws();
        if (i >= text.size()) throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] < '0' || text[i] > '9') throw InvalidArgument("bad point in cycle text '" + std::string(text) + "'");
        std::size_t value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + static_cast<std::size_t>(text[i] - '0');
          if (value >= degree) throw InvalidArgument("point " + std::to_string(value) + " outside degree " + std::to_string(degree));
          ++i;
        }
        if (used[value]) throw InvalidArgument("point " + std::to_string(value) + " repeated in '" + std::string(text) + "'");
        used[value] = true;
        cycle.push_back(static_cast<Point>(value));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      skip_ws();
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Cycle lengths of the nontrivial cycles.
  std::vector<std::size_t> cycle_lengths() const {
    std::vector<std::size_t> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 1) out.push_back(len);
    }
    return out;
  }

  /// Disjoint-cycle text, each cycle led by its least point; "()" for the identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p ∘ q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

/// Least k >= 1 with p^k = identity, computed as the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t result = 1;
  for (std::size_t len : p.cycle_lengths()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace avgord
