#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "avgord/errors.hpp"
#include "avgord/permutation.hpp"

namespace avgord {

using ElemId = std::uint32_t;

/// Caps that keep every computation at desk scale.
struct Limits {
  std::size_t max_order = 20000;   // element enumeration
  std::size_t lattice_cap = 1024;  // full subgroup lattice
  std::size_t iso_cap = 200;       // isomorphism search
};

/// Set of element ids of one group, as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  bool contains(ElemId x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  bool insert(ElemId x) {
    std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (words_[x >> 6] & bit) return false;
    words_[x >> 6] |= bit;
    return true;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::size_t universe() const noexcept { return universe_; }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  /// Ascending ids.
  std::vector<ElemId> members() const {
    std::vector<ElemId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<ElemId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

namespace detail {

/// Subgroup payload without a back-reference to its parent.
struct SubgroupCore {
  ElementSet set;
  std::vector<ElemId> generators;
};

inline constexpr std::size_t kTableLimit = 2048;

struct GroupData {
  std::size_t degree = 1;
  Limits limits;
  std::vector<Permutation> generators;
  std::vector<ElemId> generator_ids;
  std::vector<Permutation> elements;  // sorted ascending; identity first
  std::unordered_map<Permutation, ElemId, PermutationHash> index;
  std::vector<ElemId> inverse;
  std::vector<std::uint64_t> orders;
  std::vector<ElemId> table;  // row-major n*n, empty above kTableLimit

  mutable std::once_flag lattice_once;
  mutable std::vector<SubgroupCore> lattice;
  mutable std::exception_ptr lattice_error;
};

}  // namespace detail

class Subgroup;

/// Permutation group with a fully materialized, lexicographically sorted element list.
/// Immutable once built; copies share state and may be read from any thread.
class PermGroup {
 public:
  static constexpr ElemId identity = 0;

  explicit PermGroup(std::vector<Permutation> generators, Limits limits = {}) {
    if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
    auto data = std::make_shared<detail::GroupData>();
    data->degree = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != data->degree) throw InvalidArgument("generators have different degrees");
    data->limits = limits;
    data->generators = std::move(generators);
    enumerate(*data);
    data_ = std::move(data);
  }

  static PermGroup trivial(std::size_t degree = 1, Limits limits = {}) {
    return PermGroup({Permutation(degree)}, limits);
  }

  std::size_t degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  const Limits& limits() const noexcept { return data_->limits; }

  std::span<const Permutation> generators() const noexcept { return data_->generators; }
  std::span<const ElemId> generator_ids() const noexcept { return data_->generator_ids; }
  std::span<const Permutation> elements() const noexcept { return data_->elements; }
  const Permutation& element(ElemId x) const { return data_->elements[x]; }

  std::optional<ElemId> find(const Permutation& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  ElemId id_of(const Permutation& p) const {
    auto id = find(p);
    if (!id) throw InvalidArgument("permutation " + p.cycles() + " is not an element of the group");
    return *id;
  }

  ElemId mul(ElemId a, ElemId b) const {
    if (!data_->table.empty()) return data_->table[static_cast<std::size_t>(a) * order() + b];
    return data_->index.at(compose(data_->elements[a], data_->elements[b]));
  }
  ElemId inv(ElemId x) const { return data_->inverse[x]; }
  /// by * x * by^-1
  ElemId conj(ElemId x, ElemId by) const { return mul(mul(by, x), inv(by)); }
  std::uint64_t order_of(ElemId x) const { return data_->orders[x]; }

  bool same_as(const PermGroup& o) const noexcept { return data_ == o.data_; }

  /// Every subgroup of the group, computed once on first use.
  const std::vector<detail::SubgroupCore>& lattice_cores() const;

 private:
  static void enumerate(detail::GroupData& d) {
    const std::size_t cap = d.limits.max_order;
    std::unordered_map<Permutation, ElemId, PermutationHash> seen;
    std::vector<Permutation> elems{Permutation(d.degree)};
    seen.emplace(elems.front(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : d.generators) {
        Permutation y = compose(elems[i], g);
        if (seen.contains(y)) continue;
        if (elems.size() >= cap)
          throw SizeLimitError("group order exceeds the element cap of " + std::to_string(cap));
        seen.emplace(y, static_cast<ElemId>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
    std::sort(elems.begin(), elems.end());
    const std::size_t n = elems.size();
    d.index.clear();
    d.index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.index.emplace(elems[i], static_cast<ElemId>(i));
    d.elements = std::move(elems);

    d.generator_ids.clear();
    for (const auto& g : d.generators) d.generator_ids.push_back(d.index.at(g));

    d.orders.resize(n);
    d.inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.orders[i] = element_order(d.elements[i]);
      d.inverse[i] = d.index.at(d.elements[i].inverse());
    }

    if (n > detail::kTableLimit) return;
    // Right multiplication by generators, a BFS word tree, then the full table row by row:
    // x * y = (x * parent(y)) * gen(y).
    const std::size_t k = d.generator_ids.size();
    std::vector<ElemId> right(n * k);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j) right[x * k + j] = d.index.at(compose(d.elements[x], d.generators[j]));
    std::vector<ElemId> parent(n, 0), via(n, 0), bfs{0};
    std::vector<bool> reached(n, false);
    reached[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      ElemId x = bfs[i];
      for (std::size_t j = 0; j < k; ++j) {
        ElemId y = right[x * k + j];
        if (reached[y]) continue;
        reached[y] = true;
        parent[y] = x;
        via[y] = static_cast<ElemId>(j);
        bfs.push_back(y);
      }
    }
    d.table.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      ElemId* row = &d.table[x * n];
      row[0] = static_cast<ElemId>(x);
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        ElemId y = bfs[i];
        row[y] = right[static_cast<std::size_t>(row[parent[y]]) * k + via[y]];
      }
    }
  }

  std::shared_ptr<const detail::GroupData> data_;
};

/// Closure of `seeds` in `g`; also reports which seeds were needed.
inline detail::SubgroupCore close_subgroup(const PermGroup& g, std::span<const ElemId> seeds) {
  detail::SubgroupCore core{ElementSet(g.order()), {}};
  std::vector<ElemId> members{PermGroup::identity};
  core.set.insert(PermGroup::identity);
  for (ElemId s : seeds) {
    if (core.set.contains(s)) continue;
    core.generators.push_back(s);
    // Re-close from scratch over the enlarged generator list; cost |K| * |gens|.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (ElemId gen : core.generators) {
        ElemId y = g.mul(members[i], gen);
        if (core.set.insert(y)) members.push_back(y);
      }
    }
  }
  return core;
}

/// Subgroup of a PermGroup, stored as a member bitset plus generating ids.
class Subgroup {
 public:
  Subgroup(PermGroup parent, detail::SubgroupCore core) : parent_(std::move(parent)), core_(std::move(core)) {
    if (core_.set.universe() != parent_.order()) throw InvalidArgument("subgroup member set does not fit its parent");
    members_ = core_.set.members();
    if (members_.empty() || members_.front() != PermGroup::identity)
      throw Error("subgroup is missing the identity");
    if (parent_.order() % members_.size() != 0)
      throw Error("Lagrange violated: subgroup of size " + std::to_string(members_.size()) +
                  " in group of order " + std::to_string(parent_.order()));
  }

  const PermGroup& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  const ElementSet& set() const noexcept { return core_.set; }
  std::span<const ElemId> members() const noexcept { return members_; }
  std::span<const ElemId> generators() const noexcept { return core_.generators; }
  const detail::SubgroupCore& core() const noexcept { return core_; }

  bool contains(ElemId x) const { return core_.set.contains(x); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool is_subgroup_of(const Subgroup& o) const { return core_.set.is_subset_of(o.core_.set); }

  /// The subgroup as a standalone permutation group on the same points.
  PermGroup as_group() const {
    std::vector<Permutation> gens;
    for (ElemId x : core_.generators) gens.push_back(parent_.element(x));
    if (gens.empty()) gens.emplace_back(parent_.degree());
    return PermGroup(std::move(gens), parent_.limits());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.core_.set == b.core_.set;
  }

  /// Lexicographic order on sorted member lists (element ids are sorted by permutation).
  friend bool lex_less(const Subgroup& a, const Subgroup& b) {
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end());
  }

 private:
  PermGroup parent_;
  detail::SubgroupCore core_;
  std::vector<ElemId> members_;
};

/// Smallest subgroup containing `seeds`.
inline Subgroup generated_subgroup(const PermGroup& g, std::span<const ElemId> seeds) {
  for (ElemId s : seeds)
    if (s >= g.order()) throw InvalidArgument("seed is not an element of the parent group");
  return Subgroup(g, close_subgroup(g, seeds));
}

inline Subgroup generated_subgroup(const PermGroup& g, std::span<const Permutation> seeds) {
  std::vector<ElemId> ids;
  for (const auto& p : seeds) ids.push_back(g.id_of(p));
  return generated_subgroup(g, ids);
}

inline Subgroup trivial_subgroup(const PermGroup& g) { return generated_subgroup(g, std::span<const ElemId>{}); }
inline Subgroup whole_group(const PermGroup& g) { return generated_subgroup(g, g.generator_ids()); }

/// Builds a subgroup from an explicit member set after checking closure.
inline Subgroup subgroup_from_members(const PermGroup& g, const ElementSet& set) {
  auto members = set.members();
  auto core = close_subgroup(g, members);
  if (!(core.set == set)) throw InvalidArgument("member set is not closed under multiplication");
  return Subgroup(g, std::move(core));
}

namespace detail {

/// Every subgroup, seeded by the cyclic subgroups and closed under joins with them.
/// Sorted by (order, member list).
inline std::vector<SubgroupCore> compute_lattice(const PermGroup& g) {
  std::vector<SubgroupCore> cyclic;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  ElementSet covered(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    ElemId seed[] = {x};
    auto core = close_subgroup(g, seed);
    if (seen.emplace(core.set, cyclic.size()).second) cyclic.push_back(std::move(core));
  }
  std::vector<SubgroupCore> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.set.is_subset_of(all[i].set)) continue;
      std::vector<ElemId> seeds = all[i].generators;
      seeds.insert(seeds.end(), c.generators.begin(), c.generators.end());
      auto joined = close_subgroup(g, seeds);
      if (seen.emplace(joined.set, all.size()).second) all.push_back(std::move(joined));
    }
  }
  std::vector<std::pair<std::vector<ElemId>, std::size_t>> keyed;
  keyed.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) keyed.emplace_back(all[i].set.members(), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SubgroupCore> sorted;
  sorted.reserve(all.size());
  for (auto& [members, i] : keyed) sorted.push_back(std::move(all[i]));
  return sorted;
}

}  // namespace detail

inline const std::vector<detail::SubgroupCore>& PermGroup::lattice_cores() const {
  if (order() > limits().lattice_cap)
    throw SizeLimitError("group order " + std::to_string(order()) + " exceeds the lattice cap of " +
                         std::to_string(limits().lattice_cap));
  std::call_once(data_->lattice_once, [this] {
    try {
      data_->lattice = detail::compute_lattice(*this);
    } catch (...) {
      data_->lattice_error = std::current_exception();
    }
  });
  if (data_->lattice_error) std::rethrow_exception(data_->lattice_error);
  return data_->lattice;
}

}  // namespace avgord
