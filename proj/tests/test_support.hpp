#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "avgord/avgord.hpp"

// Oracles in this file work on raw permutations with std::set and repeated composition,
// never touching the Cayley tables or closure code under test.
namespace oracle {

using avgord::Permutation;
using PermSet = std::set<Permutation>;

inline Permutation perm(const std::string& cycles, std::size_t degree) {
  return Permutation::from_cycles(cycles, degree);
}

inline PermSet closure(const std::vector<Permutation>& gens, std::size_t degree) {
  PermSet out{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = avgord::compose(x, g);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

inline std::uint64_t order_by_powers(const Permutation& p) {
  Permutation cur = p;
  std::uint64_t k = 1;
  while (!cur.is_identity()) {
    cur = avgord::compose(cur, p);
    ++k;
  }
  return k;
}

inline std::map<std::uint64_t, std::uint64_t> spectrum(const PermSet& elems) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& x : elems) ++out[order_by_powers(x)];
  return out;
}

inline bool closed(const PermSet& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(avgord::compose(a, b))) return false;
  return true;
}

/// Every subset containing the identity that is closed under composition. Exponential, so
/// only for groups of at most 12 elements; subsets are grown along a fixed element order.
inline std::vector<PermSet> all_subgroups(const PermSet& elems) {
  std::vector<Permutation> list(elems.begin(), elems.end());
  const std::size_t n = list.size();
  std::vector<PermSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // identity sorts first
    PermSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(list[i]);
    if (closed(s)) out.push_back(std::move(s));
  }
  return out;
}

inline bool normal_in(const PermSet& h, const PermSet& g) {
  for (const auto& x : g)
    for (const auto& y : h)
      if (!h.count(avgord::compose(avgord::compose(x, y), x.inverse()))) return false;
  return true;
}

inline PermSet derived(const PermSet& g, std::size_t degree) {
  std::vector<Permutation> comms;
  for (const auto& x : g)
    for (const auto& y : g)
      comms.push_back(avgord::compose(avgord::compose(x.inverse(), y.inverse()), avgord::compose(x, y)));
  return closure(comms, degree);
}

inline PermSet members_of(const avgord::Subgroup& h) {
  PermSet out;
  for (auto x : h.members()) out.insert(h.parent().element(x));
  return out;
}

inline avgord::Rational avg(const PermSet& elems) {
  avgord::BigInt total = 0;
  for (const auto& x : elems) total += order_by_powers(x);
  return avgord::Rational(total, avgord::BigInt(elems.size()));
}

}  // namespace oracle

inline const std::vector<avgord::CatalogEntry>& shipped_catalog() {
  static const auto entries = avgord::load_catalog(AVGORD_DEFAULT_CATALOG);
  return entries;
}

inline avgord::PermGroup catalog_group(const std::string& name) {
  for (const auto& e : shipped_catalog())
    if (e.name == name) return e.group();
  throw std::runtime_error("no catalog entry " + name);
}
