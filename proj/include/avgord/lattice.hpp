#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "avgord/subgroups.hpp"

namespace avgord {

/// Every subgroup exactly once, sorted by (order, member list). Requires order <= lattice cap.
inline std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& core : g.lattice_cores()) out.emplace_back(g, core);
  return out;
}

/// Normal subgroups, sorted by (order, member list).
///
/// Built without the full lattice: every normal subgroup is the join of the normal closures
/// of its elements, so closing the set of normal closures of single elements under joins
/// gives all of them.
inline std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::size_t> atoms;
  ElementSet done(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    if (done.contains(x)) continue;
    // Every generator x^k (k coprime to the order) of <x> has the same normal closure.
    const std::uint64_t ord = g.order_of(x);
    ElemId power = x;
    for (std::uint64_t k = 1; k <= ord; ++k, power = g.mul(power, x))
      if (std::gcd(k, ord) == 1) done.insert(power);
    ElemId seed[] = {x};
    Subgroup n = normal_closure(g, seed);
    if (seen.emplace(n.set(), found.size()).second) {
      atoms.push_back(found.size());
      found.push_back(std::move(n));
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t a : atoms) {
      if (found[a].is_subgroup_of(found[i])) continue;
      std::vector<ElemId> seeds(found[i].generators().begin(), found[i].generators().end());
      seeds.insert(seeds.end(), found[a].generators().begin(), found[a].generators().end());
      Subgroup j = generated_subgroup(g, seeds);
      if (seen.emplace(j.set(), found.size()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_less(a, b);
  });
  return found;
}

/// Proper subgroups not contained in any other proper subgroup.
inline std::vector<Subgroup> maximal_subgroups(const PermGroup& g) {
  auto all = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_whole()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (j != i && !all[j].is_whole() && all[j].order() > all[i].order() && all[i].is_subgroup_of(all[j]))
        maximal = false;
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

/// Φ(G): intersection of the maximal subgroups (the trivial group has none, so Φ(1) = 1).
inline Subgroup frattini_subgroup(const PermGroup& g) {
  auto maxes = maximal_subgroups(g);
  if (maxes.empty()) return whole_group(g);
  ElementSet set = maxes.front().set();
  for (const auto& m : maxes) set = set & m.set();
  return subgroup_from_members(g, set);
}

}  // namespace avgord
