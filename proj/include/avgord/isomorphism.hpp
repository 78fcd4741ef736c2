#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "avgord/perm_group.hpp"

namespace avgord {

namespace detail {

inline std::map<std::uint64_t, std::uint64_t> spectrum_of(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (ElemId x = 0; x < g.order(); ++x) ++out[g.order_of(x)];
  return out;
}

/// Generating sequence chosen greedily, highest element order first.
inline std::vector<ElemId> greedy_generators(const PermGroup& g) {
  std::vector<ElemId> ids(g.order());
  for (ElemId x = 0; x < g.order(); ++x) ids[x] = x;
  std::stable_sort(ids.begin(), ids.end(), [&](ElemId a, ElemId b) { return g.order_of(a) > g.order_of(b); });
  std::vector<ElemId> gens;
  auto core = close_subgroup(g, gens);
  for (ElemId x : ids) {
    if (core.set.size() == g.order()) break;
    if (core.set.contains(x)) continue;
    gens.push_back(x);
    core = close_subgroup(g, gens);
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const PermGroup& a, const PermGroup& b) : a_(a), b_(b), gens_(greedy_generators(a)) {
    for (ElemId x : gens_) {
      std::vector<ElemId> cands;
      for (ElemId y = 0; y < b.order(); ++y)
        if (b.order_of(y) == a.order_of(x)) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  std::optional<std::vector<ElemId>> run() {
    images_.assign(gens_.size(), 0);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  // Extends the map over <gens_[0..depth)> by right multiplication, checking every edge.
  bool consistent(std::size_t depth) {
    const ElemId unset = static_cast<ElemId>(-1);
    map_.assign(a_.order(), unset);
    std::vector<bool> used(b_.order(), false);
    std::vector<ElemId> queue{PermGroup::identity};
    map_[PermGroup::identity] = PermGroup::identity;
    used[PermGroup::identity] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElemId x = queue[i];
      for (std::size_t j = 0; j < depth; ++j) {
        ElemId y = a_.mul(x, gens_[j]);
        ElemId v = b_.mul(map_[x], images_[j]);
        if (map_[y] == unset) {
          if (used[v]) return false;
          used[v] = true;
          map_[y] = v;
          queue.push_back(y);
        } else if (map_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == gens_.size()) return consistent(depth);
    for (ElemId y : candidates_[depth]) {
      images_[depth] = y;
      if (consistent(depth + 1) && search(depth + 1)) return true;
    }
    return false;
  }

  const PermGroup& a_;
  const PermGroup& b_;
  std::vector<ElemId> gens_;
  std::vector<std::vector<ElemId>> candidates_;
  std::vector<ElemId> images_;
  std::vector<ElemId> map_;
};

}  // namespace detail

/// An isomorphism a -> b as a map on element ids, or nothing.
/// Throws SizeLimitError when equal orders exceed the isomorphism cap.
inline std::optional<std::vector<ElemId>> find_isomorphism(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t cap = std::min(a.limits().iso_cap, b.limits().iso_cap);
  if (a.order() > cap)
    throw SizeLimitError("isomorphism test on order " + std::to_string(a.order()) + " exceeds the cap of " +
                         std::to_string(cap));
  if (detail::spectrum_of(a) != detail::spectrum_of(b)) return std::nullopt;
  return detail::IsoSearch(a, b).run();
}

inline bool is_isomorphic(const PermGroup& a, const PermGroup& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace avgord
