#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_set>
#include <vector>

#include "avgord/number.hpp"
#include "avgord/perm_group.hpp"

namespace avgord {

namespace detail {

inline void require_parent(const PermGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw InvalidArgument("subgroup belongs to a different group");
}

/// Subgroup of `g` that is the `by`-conjugate of `h`.
inline Subgroup conjugate(const PermGroup& g, const Subgroup& h, ElemId by) {
  ElementSet set(g.order());
  for (ElemId x : h.members()) set.insert(g.conj(x, by));
  std::vector<ElemId> gens;
  for (ElemId x : h.generators()) gens.push_back(g.conj(x, by));
  auto core = close_subgroup(g, gens);
  return Subgroup(g, std::move(core));
}

}  // namespace detail

/// True iff x h x^-1 lies in h for every generator x of g (equivalent to x h x^-1 = h for all x in g).
inline bool is_normal(const PermGroup& g, const Subgroup& h) {
  detail::require_parent(g, h);
  for (ElemId x : g.generator_ids())
    for (ElemId s : h.generators())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

/// Smallest normal subgroup of g containing `seeds`.
inline Subgroup normal_closure(const PermGroup& g, std::span<const ElemId> seeds) {
  auto core = close_subgroup(g, seeds);
  for (bool grew = true; grew;) {
    grew = false;
    for (ElemId x : g.generator_ids()) {
      for (std::size_t i = 0; i < core.generators.size(); ++i) {
        ElemId c = g.conj(core.generators[i], x);
        if (core.set.contains(c)) continue;
        std::vector<ElemId> seeds2 = core.generators;
        seeds2.push_back(c);
        core = close_subgroup(g, seeds2);
        grew = true;
      }
    }
  }
  return Subgroup(g, std::move(core));
}

inline ElemId commutator(const PermGroup& g, ElemId x, ElemId y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

/// [h, h] for a subgroup h of g: the normal closure in h of the commutators of h's generators.
inline Subgroup derived_subgroup(const PermGroup& g, const Subgroup& h) {
  detail::require_parent(g, h);
  auto gens = h.generators();
  std::vector<ElemId> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(g, gens[i], gens[j]));
  auto core = close_subgroup(g, seeds);
  for (bool grew = true; grew;) {
    grew = false;
    for (ElemId x : gens) {
      for (std::size_t i = 0; i < core.generators.size(); ++i) {
        ElemId c = g.conj(core.generators[i], x);
        if (core.set.contains(c)) continue;
        std::vector<ElemId> seeds2 = core.generators;
        seeds2.push_back(c);
        core = close_subgroup(g, seeds2);
        grew = true;
      }
    }
  }
  return Subgroup(g, std::move(core));
}

/// G' = subgroup generated by all commutators.
inline Subgroup derived_subgroup(const PermGroup& g) { return derived_subgroup(g, whole_group(g)); }

/// Elements commuting with every element of g.
inline Subgroup center(const PermGroup& g) {
  ElementSet set(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemId s : g.generator_ids())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) set.insert(x);
  }
  return subgroup_from_members(g, set);
}

inline bool is_p_group_order(std::uint64_t order, std::uint64_t p) { return is_power_of(order, p); }

/// All Sylow p-subgroups, sorted by member list.
inline std::vector<Subgroup> sylow_subgroups(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    throw InvalidArgument(std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  const std::uint64_t target = p_part(g.order(), p);
  // Greedy growth: every p-subgroup lies in a Sylow subgroup, so extending by any p-element
  // that keeps the order a power of p eventually reaches p^a.
  auto core = close_subgroup(g, std::span<const ElemId>{});
  for (bool grew = true; grew && core.set.size() < target;) {
    grew = false;
    for (ElemId x = 1; x < g.order() && core.set.size() < target; ++x) {
      if (core.set.contains(x) || !is_power_of(g.order_of(x), p)) continue;
      std::vector<ElemId> seeds = core.generators;
      seeds.push_back(x);
      auto bigger = close_subgroup(g, seeds);
      if (is_power_of(bigger.set.size(), p)) {
        core = std::move(bigger);
        grew = true;
      }
    }
  }
  if (core.set.size() != target) throw Error("Sylow search did not reach the full p-part");
  Subgroup first(g, std::move(core));

  std::vector<Subgroup> all;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (ElemId x = 0; x < g.order(); ++x) {
    Subgroup c = detail::conjugate(g, first, x);
    if (seen.insert(c.set()).second) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) { return lex_less(a, b); });
  return all;
}

/// The Sylow p-subgroup with the lexicographically least member list.
inline Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) { return sylow_subgroups(g, p).front(); }

/// O_p(G): intersection of all Sylow p-subgroups; trivial when p does not divide |G|.
inline Subgroup p_core(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return trivial_subgroup(g);
  auto sylows = sylow_subgroups(g, p);
  ElementSet set = sylows.front().set();
  for (const auto& s : sylows) set = set & s.set();
  return subgroup_from_members(g, set);
}

/// F(G): generated by the p-cores over the primes dividing |G|.
inline Subgroup fitting_subgroup(const PermGroup& g) {
  std::vector<ElemId> seeds;
  for (std::uint64_t p : prime_divisors(g.order())) {
    auto core = p_core(g, p);
    seeds.insert(seeds.end(), core.generators().begin(), core.generators().end());
  }
  return generated_subgroup(g, seeds);
}

/// Quotient group together with the natural projection on element ids.
struct Quotient {
  PermGroup group;
  std::vector<ElemId> projection;  // parent element id -> quotient element id
};

/// G/N acting on the left cosets of N; each coset is represented by its least member.
inline Quotient quotient_with_projection(const PermGroup& g, const Subgroup& n) {
  detail::require_parent(g, n);
  if (!is_normal(g, n)) throw InvalidArgument("quotient requires a normal subgroup");
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), none);
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != none) continue;
    for (ElemId m : n.members()) coset_of[g.mul(x, m)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t index = reps.size();
  auto action = [&](ElemId x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = static_cast<Point>(coset_of[g.mul(x, reps[c])]);
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElemId s : g.generator_ids()) gens.push_back(action(s));
  PermGroup q(std::move(gens), g.limits());
  std::vector<ElemId> projection(g.order());
  for (ElemId x = 0; x < g.order(); ++x) projection[x] = q.id_of(action(reps[coset_of[x]]));
  return {std::move(q), std::move(projection)};
}

inline PermGroup quotient(const PermGroup& g, const Subgroup& n) { return quotient_with_projection(g, n).group; }

/// a × b acting on the disjoint union of their point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  if (a.order() * b.order() > a.limits().max_order)
    throw SizeLimitError("direct product order " + std::to_string(a.order() * b.order()) +
                         " exceeds the element cap of " + std::to_string(a.limits().max_order));
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::move(gens), a.limits());
}

}  // namespace avgord
