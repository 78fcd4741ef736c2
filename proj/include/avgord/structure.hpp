#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "avgord/lattice.hpp"
#include "avgord/order_stats.hpp"
#include "avgord/subgroups.hpp"

namespace avgord {

/// Normal subgroup K with complement H acting fixed-point-freely on K.
struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
};

inline bool is_abelian(const PermGroup& g) {
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

inline bool is_p_group(const PermGroup& g, std::uint64_t p) { return is_power_of(g.order(), p); }

/// Every Sylow subgroup is normal. A Sylow p-subgroup P is normal exactly when the p-elements
/// number |P|, so this is decided by counting.
inline bool is_nilpotent(const PermGroup& g) {
  for (std::uint64_t p : prime_divisors(g.order())) {
    std::uint64_t p_elements = 0;
    for (ElemId x = 0; x < g.order(); ++x)
      if (is_power_of(g.order_of(x), p)) ++p_elements;
    if (p_elements != p_part(g.order(), p)) return false;
  }
  return true;
}

/// The derived series reaches the trivial subgroup.
inline bool is_solvable(const PermGroup& g) {
  Subgroup cur = whole_group(g);
  while (!cur.is_trivial()) {
    Subgroup next = derived_subgroup(g, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

namespace detail {

/// First (by element id) normal subgroup of prime order, if any.
inline std::optional<Subgroup> prime_order_normal_subgroup(const PermGroup& g) {
  for (ElemId x = 1; x < g.order(); ++x) {
    if (!is_prime(g.order_of(x))) continue;
    ElemId seed[] = {x};
    Subgroup c = generated_subgroup(g, seed);
    if (is_normal(g, c)) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// Greedy chain test: quotient by any normal subgroup of prime order until trivial.
/// Quotients of supersolvable groups are supersolvable, so the choice never matters.
inline bool is_supersolvable(const PermGroup& g) {
  PermGroup cur = g;
  while (cur.order() > 1) {
    auto n = detail::prime_order_normal_subgroup(cur);
    if (!n) return false;
    cur = quotient(cur, *n);
  }
  return true;
}

/// lcm of all element orders.
inline std::uint64_t exponent(const PermGroup& g) {
  std::uint64_t e = 1;
  for (ElemId x = 0; x < g.order(); ++x) e = std::lcm(e, g.order_of(x));
  return e;
}

/// π_e(G), ascending.
inline std::vector<std::uint64_t> element_order_set(const PermGroup& g) { return order_spectrum(g).orders(); }

inline bool is_elementary_abelian(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_abelian(g)) return false;
  for (ElemId x = 1; x < g.order(); ++x)
    if (g.order_of(x) != p) return false;
  return true;
}

/// Same test on a subgroup's members, without building a separate group.
inline bool is_elementary_abelian(const Subgroup& h, std::uint64_t p) {
  const PermGroup& g = h.parent();
  for (ElemId x : h.members())
    if (x != PermGroup::identity && g.order_of(x) != p) return false;
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

/// Ω_1(G) for a p-group: generated by the elements of order dividing p.
inline Subgroup omega1(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_p_group(g, p)) throw InvalidArgument("omega1 requires a " + std::to_string(p) + "-group");
  std::vector<ElemId> seeds;
  for (ElemId x = 1; x < g.order(); ++x)
    if (p % g.order_of(x) == 0) seeds.push_back(x);
  return generated_subgroup(g, seeds);
}

namespace detail {

inline bool fixed_point_free(const PermGroup& g, const Subgroup& kernel, const Subgroup& complement) {
  for (ElemId h : complement.members()) {
    if (h == PermGroup::identity) continue;
    for (ElemId k : kernel.members())
      if (k != PermGroup::identity && g.conj(k, h) == k) return false;
  }
  return true;
}

/// A complement to the normal Hall subgroup consisting of the elements whose order divides
/// `kernel_order`, grown greedily from elements of coprime order.
inline std::optional<Subgroup> hall_complement(const PermGroup& g, std::uint64_t kernel_order) {
  const std::uint64_t target = g.order() / kernel_order;
  auto core = close_subgroup(g, std::span<const ElemId>{});
  for (bool grew = true; grew && core.set.size() < target;) {
    grew = false;
    for (ElemId x = 1; x < g.order() && core.set.size() < target; ++x) {
      if (core.set.contains(x) || std::gcd(g.order_of(x), kernel_order) != 1) continue;
      std::vector<ElemId> seeds = core.generators;
      seeds.push_back(x);
      auto bigger = close_subgroup(g, seeds);
      if (target % bigger.set.size() == 0) {
        core = std::move(bigger);
        grew = true;
      }
    }
  }
  if (core.set.size() != target) return std::nullopt;
  return Subgroup(g, std::move(core));
}

}  // namespace detail

/// Nontrivial K ⋊ H with fixed-point-free action, or nothing.
///
/// A fixed-point-free complement has order dividing |K| - 1, so K is a normal Hall subgroup:
/// the set of elements whose order divides |K|. Each Hall divisor is tried; complements of a
/// normal Hall subgroup are conjugate, so one complement decides fixed-point-freeness for all.
/// Returns the lexicographically least kernel and, for it, the least complement.
inline std::optional<FrobeniusDecomposition> frobenius_decomposition(const PermGroup& g) {
  const std::uint64_t n = g.order();
  std::optional<FrobeniusDecomposition> best;
  for (std::uint64_t k = 2; k < n; ++k) {
    if (n % k != 0 || std::gcd(k, n / k) != 1) continue;
    ElementSet set(n);
    std::uint64_t count = 0;
    for (ElemId x = 0; x < n; ++x)
      if (k % g.order_of(x) == 0) {
        set.insert(x);
        ++count;
      }
    if (count != k) continue;
    auto members = set.members();
    auto core = close_subgroup(g, members);
    if (!(core.set == set)) continue;
    Subgroup kernel(g, std::move(core));
    auto complement = detail::hall_complement(g, k);
    if (!complement || !detail::fixed_point_free(g, kernel, *complement)) continue;
    Subgroup least = *complement;
    for (ElemId y : kernel.members()) {
      Subgroup c = detail::conjugate(g, *complement, y);
      if (lex_less(c, least)) least = std::move(c);
    }
    if (!best || lex_less(kernel, best->kernel)) best = FrobeniusDecomposition{std::move(kernel), std::move(least)};
  }
  return best;
}

/// Solvable, not supersolvable, and every proper quotient supersolvable.
inline bool is_just_non_supersolvable(const PermGroup& g) {
  if (!is_solvable(g) || is_supersolvable(g)) return false;
  for (const auto& n : normal_subgroups(g)) {
    if (n.is_trivial()) continue;
    if (!is_supersolvable(quotient(g, n))) return false;
  }
  return true;
}

}  // namespace avgord
