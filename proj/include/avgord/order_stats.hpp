#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "avgord/number.hpp"
#include "avgord/perm_group.hpp"
#include "avgord/rational.hpp"

namespace avgord {

/// Element-order histogram d -> n_d, keys ascending.
class OrderSpectrum {
 public:
  OrderSpectrum() = default;
  explicit OrderSpectrum(std::map<std::uint64_t, std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::uint64_t count(std::uint64_t d) const {
    auto it = counts_.find(d);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Distinct orders d_1 < d_2 < ... < d_r.
  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& [d, n] : counts_) out.push_back(d);
    return out;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [d, n] : counts_) t += n;
    return t;
  }

  const std::map<std::uint64_t, std::uint64_t>& entries() const& noexcept { return counts_; }
  std::map<std::uint64_t, std::uint64_t> entries() && { return std::move(counts_); }

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
};

inline OrderSpectrum order_spectrum(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (ElemId x = 0; x < g.order(); ++x) ++counts[g.order_of(x)];
  return OrderSpectrum(std::move(counts));
}

/// ψ(G): sum of element orders.
inline BigInt psi(const PermGroup& g) {
  BigInt total = 0;
  for (ElemId x = 0; x < g.order(); ++x) total += g.order_of(x);
  return total;
}

/// o(G) = ψ(G) / |G|.
inline Rational avg_order(const PermGroup& g) { return Rational(psi(g), BigInt(g.order())); }

/// d -> number of cyclic subgroups of order d, found by enumerating the subgroups <x>.
inline std::map<std::uint64_t, std::uint64_t> cyclic_subgroup_counts(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  std::vector<bool> done(g.order(), false);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    const std::uint64_t ord = g.order_of(x);
    ++out[ord];
    // mark every generator of <x>
    ElemId power = x;
    for (std::uint64_t k = 1; k <= ord; ++k, power = g.mul(power, x))
      if (std::gcd(k, ord) == 1) done[power] = true;
  }
  return out;
}

/// ψ(G) = Σ d φ(d) n'_d.
inline BigInt psi_via_cyclic_counts(const PermGroup& g) {
  BigInt total = 0;
  for (const auto& [d, count] : cyclic_subgroup_counts(g)) total += BigInt(d) * euler_phi(d) * count;
  return total;
}

/// Right-hand side of the lower bound on n_{d_{s-1}} implied by o(G) < c:
///   (d_s - c)/(d_s - d_{s-1}) |G| - Σ_{i=1}^{s-2} (d_s - d_i)/(d_s - d_{s-1}) n_{d_i}.
/// `s` is 1-based over the ascending distinct orders. The caller supplies the o(G) < c hypothesis.
inline Rational lemma21_bound(const OrderSpectrum& spectrum, std::uint64_t group_order, std::size_t s,
                              const Rational& c) {
  const auto d = spectrum.orders();
  if (d.size() < 3) throw InvalidArgument("the bound needs at least three distinct element orders");
  if (s < 3 || s > d.size())
    throw InvalidArgument("index s=" + std::to_string(s) + " outside 3.." + std::to_string(d.size()));
  if (c <= Rational(0)) throw InvalidArgument("c must be positive");
  const Rational ds(static_cast<std::int64_t>(d[s - 1]));
  const Rational gap = ds - Rational(static_cast<std::int64_t>(d[s - 2]));
  Rational rhs = (ds - c) / gap * Rational(static_cast<std::int64_t>(group_order));
  for (std::size_t i = 0; i + 2 < s; ++i)
    rhs -= (ds - Rational(static_cast<std::int64_t>(d[i]))) / gap *
           Rational(static_cast<std::int64_t>(spectrum.count(d[i])));
  return rhs;
}

}  // namespace avgord
