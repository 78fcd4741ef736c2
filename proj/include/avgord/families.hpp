#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "avgord/number.hpp"
#include "avgord/subgroups.hpp"

namespace avgord {

/// Square matrix over the prime field F_p, row-major residues.
class MatrixOverFp {
 public:
  MatrixOverFp(std::uint64_t p, std::size_t n, std::vector<std::int64_t> entries) : p_(p), n_(n) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (n == 0 || entries.size() != n * n) throw InvalidArgument("matrix needs n*n entries with n >= 1");
    entries_.reserve(entries.size());
    const auto mod = static_cast<std::int64_t>(p);
    for (auto e : entries) entries_.push_back(static_cast<std::uint64_t>(((e % mod) + mod) % mod));
  }

  static MatrixOverFp identity(std::uint64_t p, std::size_t n) {
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return {p, n, std::move(e)};
  }

  /// Block-diagonal sum of `count` copies of `block`.
  static MatrixOverFp block_diagonal(const MatrixOverFp& block, std::size_t count) {
    const std::size_t b = block.n_, n = b * count;
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t c = 0; c < count; ++c)
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) e[(c * b + i) * n + c * b + j] = static_cast<std::int64_t>(block.at(i, j));
    return {block.p_, n, std::move(e)};
  }

  std::uint64_t p() const noexcept { return p_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::uint64_t determinant() const {
    std::vector<std::uint64_t> m = entries_;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && m[pivot * n_ + col] == 0) ++pivot;
      if (pivot == n_) return 0;
      if (pivot != col) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[col * n_ + j]);
        det = (p_ - det) % p_;
      }
      det = det * m[col * n_ + col] % p_;
      std::uint64_t inv = modpow(m[col * n_ + col], p_ - 2);
      for (std::size_t r = col + 1; r < n_; ++r) {
        std::uint64_t f = m[r * n_ + col] * inv % p_;
        for (std::size_t j = col; j < n_; ++j) m[r * n_ + j] = (m[r * n_ + j] + p_ * p_ - f * m[col * n_ + j]) % p_;
      }
    }
    return det;
  }

  bool invertible() const { return determinant() != 0; }

  /// A * v for a coordinate vector over F_p.
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] = (out[i] + at(i, j) * v[j]) % p_;
    return out;
  }

  friend MatrixOverFp operator*(const MatrixOverFp& a, const MatrixOverFp& b) {
    std::vector<std::int64_t> e(a.n_ * a.n_, 0);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < a.n_; ++k) s = (s + a.at(i, k) * b.at(k, j)) % a.p_;
        e[i * a.n_ + j] = static_cast<std::int64_t>(s);
      }
    return {a.p_, a.n_, std::move(e)};
  }

  friend bool operator==(const MatrixOverFp&, const MatrixOverFp&) = default;
  friend auto operator<=>(const MatrixOverFp& a, const MatrixOverFp& b) { return a.entries_ <=> b.entries_; }

 private:
  std::uint64_t modpow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p_;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return r;
  }

  std::uint64_t p_;
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

/// Order of the matrix group generated by `gens`, by closure.
inline std::size_t matrix_group_order(const std::vector<MatrixOverFp>& gens) {
  if (gens.empty()) return 1;
  std::set<MatrixOverFp> seen{MatrixOverFp::identity(gens.front().p(), gens.front().n())};
  std::vector<MatrixOverFp> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<MatrixOverFp> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        MatrixOverFp y = m * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace families {

/// Largest p^n accepted by affine_semidirect.
inline constexpr std::uint64_t kMaxAffineDegree = 4096;

inline Permutation cycle_on(std::size_t degree, std::size_t start, std::size_t length) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i) img[start + i] = static_cast<Point>(start + (i + 1) % length);
  return Permutation(std::move(img));
}

inline PermGroup cyclic(std::size_t n, Limits limits = {}) {
  if (n == 0) throw InvalidArgument("cyclic group order must be at least 1");
  return PermGroup({cycle_on(n, 0, n)}, limits);
}

/// C_p^m as m disjoint p-cycles; the trivial group for m = 0.
inline PermGroup elementary_abelian(std::uint64_t p, std::size_t m, Limits limits = {}) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (m == 0) return PermGroup::trivial(1, limits);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(cycle_on(p * m, i * p, p));
  return PermGroup(std::move(gens), limits);
}

/// Dihedral group of the given (even) order, acting on order/2 points when order >= 6.
inline PermGroup dihedral(std::size_t order, Limits limits = {}) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral group order must be even and at least 2");
  const std::size_t n = order / 2;
  if (n == 1) return cyclic(2, limits);
  if (n == 2) return PermGroup({Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)}, limits);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup({cycle_on(n, 0, n), Permutation(std::move(refl))}, limits);
}

/// Q8 in its regular representation.
inline PermGroup quaternion8(Limits limits = {}) {
  return PermGroup({Permutation::from_cycles("(0 1 3 6)(2 5 7 4)", 8), Permutation::from_cycles("(0 2 3 7)(1 4 6 5)", 8)},
                   limits);
}

inline PermGroup symmetric(std::size_t n, Limits limits = {}) {
  if (n == 0) throw InvalidArgument("symmetric group degree must be at least 1");
  if (n == 1) return PermGroup::trivial(1, limits);
  if (n == 2) return cyclic(2, limits);
  return PermGroup({cycle_on(n, 0, 2), cycle_on(n, 0, n)}, limits);
}

/// A_n generated by the 3-cycles (0 1 k); trivial on n points for n <= 2.
inline PermGroup alternating(std::size_t n, Limits limits = {}) {
  if (n == 0) throw InvalidArgument("alternating group degree must be at least 1");
  if (n <= 2) return PermGroup::trivial(n, limits);
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::move(gens), limits);
}

/// F_p^n ⋊ ⟨matrices⟩ acting on the p^n vectors (vector index = Σ x_i p^i):
/// all translations x -> x + e_i together with x -> A x.
inline PermGroup affine_semidirect(std::uint64_t p, std::size_t n, const std::vector<MatrixOverFp>& matrices,
                                   Limits limits = {}) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("dimension must be at least 1");
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= p;
    if (points > kMaxAffineDegree)
      throw SizeLimitError("affine degree p^n exceeds " + std::to_string(kMaxAffineDegree));
  }
  auto decode = [&](std::uint64_t v) {
    std::vector<std::uint64_t> x(n);
    for (std::size_t i = 0; i < n; ++i, v /= p) x[i] = v % p;
    return x;
  };
  auto encode = [&](const std::vector<std::uint64_t>& x) {
    std::uint64_t v = 0;
    for (std::size_t i = n; i-- > 0;) v = v * p + x[i];
    return static_cast<Point>(v);
  };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> img(points);
    for (std::uint64_t v = 0; v < points; ++v) {
      auto x = decode(v);
      x[i] = (x[i] + 1) % p;
      img[v] = encode(x);
    }
    gens.emplace_back(std::move(img));
  }
  for (const auto& a : matrices) {
    if (a.p() != p || a.n() != n) throw InvalidArgument("matrix does not match the field or dimension");
    if (!a.invertible()) throw InvalidArgument("singular matrix generator");
    std::vector<Point> img(points);
    for (std::uint64_t v = 0; v < points; ++v) img[v] = encode(a.apply(decode(v)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::move(gens), limits);
}

/// C_3^m ⋊ C_2 with the involution acting as -I; order 2 * 3^m.
inline PermGroup frobenius_3m_2(std::size_t m, Limits limits = {}) {
  if (m == 0) throw InvalidArgument("m must be at least 1");
  std::vector<std::int64_t> e(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) e[i * m + i] = -1;
  return affine_semidirect(3, m, {MatrixOverFp(3, m, std::move(e))}, limits);
}

/// C_2^{2m} ⋊ C_3 with m copies of the companion matrix of x^2 + x + 1; order 3 * 4^m.
inline PermGroup fpf_c3_on_c2(std::size_t m, Limits limits = {}) {
  if (m == 0) throw InvalidArgument("m must be at least 1");
  MatrixOverFp block(2, 2, {0, 1, 1, 1});
  return affine_semidirect(2, 2 * m, {MatrixOverFp::block_diagonal(block, m)}, limits);
}

/// F_3^2 ⋊ D8, with D8 ≤ GL(2,3) generated by a quarter rotation and a reflection; order 72.
inline PermGroup c3sq_d8(Limits limits = {}) {
  return affine_semidirect(3, 2, {MatrixOverFp(3, 2, {0, -1, 1, 0}), MatrixOverFp(3, 2, {1, 0, 0, -1})}, limits);
}

/// D8 × C_2^k; order 2^{k+3}.
inline PermGroup d8_times_c2power(std::size_t k, Limits limits = {}) {
  PermGroup d8 = dihedral(8, limits);
  if (k == 0) return d8;
  return direct_product(d8, elementary_abelian(2, k, limits));
}

}  // namespace families
}  // namespace avgord
