#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "avgord/families.hpp"
#include "avgord/lattice.hpp"
#include "avgord/order_stats.hpp"
#include "avgord/structure.hpp"

namespace avgord {

/// One instance of an element- or subgroup-count inequality. `holds` only means something
/// when `applicable` (the hypothesis is satisfied).
struct BoundReport {
  std::string bound_name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool applicable = false;
};

namespace detail {

inline Rational count_of(const OrderSpectrum& s, std::uint64_t d) {
  return Rational(static_cast<std::int64_t>(s.count(d)));
}

inline Rational order_as_rational(const PermGroup& g) { return Rational(static_cast<std::int64_t>(g.order())); }

}  // namespace detail

/// n_p(G) <= p/(p+1) |G| - 1 whenever G is not a p-group.
inline BoundReport check_laffey_np(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) throw InvalidArgument(std::to_string(p) + " does not divide the group order");
  BoundReport r;
  r.bound_name = "laffey_np(p=" + std::to_string(p) + ")";
  r.lhs = detail::count_of(order_spectrum(g), p);
  const auto pr = static_cast<std::int64_t>(p);
  r.rhs = Rational(pr, pr + 1) * detail::order_as_rational(g) - Rational(1);
  r.applicable = !is_p_group(g, p);
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// n_3(G) <= 7/9 |G| - 1 for a 3-group of exponent other than 3.
inline BoundReport check_laffey_3group(const PermGroup& g) {
  if (g.order() == 1 || !is_p_group(g, 3)) throw InvalidArgument("check_laffey_3group requires a nontrivial 3-group");
  BoundReport r;
  r.bound_name = "laffey_3group";
  r.lhs = detail::count_of(order_spectrum(g), 3);
  r.rhs = Rational(7, 9) * detail::order_as_rational(g) - Rational(1);
  r.applicable = exponent(g) != 3;
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// π_e(G) = {1,2,3} forces a Frobenius group C_3^m ⋊ C_2 or C_2^{2m} ⋊ C_3.
/// lhs/rhs carry |K| and |H| of the decomposition found (0/0 when none).
inline BoundReport check_brandl_shi(const PermGroup& g) {
  BoundReport r;
  r.bound_name = "brandl_shi";
  r.applicable = element_order_set(g) == std::vector<std::uint64_t>{1, 2, 3};
  if (!r.applicable) return r;
  auto dec = frobenius_decomposition(g);
  if (!dec) return r;
  const std::size_t k = dec->kernel.order(), h = dec->complement.order();
  r.lhs = Rational(static_cast<std::int64_t>(k));
  r.rhs = Rational(static_cast<std::int64_t>(h));
  const bool three_kernel = h == 2 && is_elementary_abelian(dec->kernel, 3);
  // C_2^{2m}: elementary abelian 2-group whose rank is even, i.e. |K| is a power of 4.
  const bool two_kernel = h == 3 && is_elementary_abelian(dec->kernel, 2) && is_power_of(k, 4);
  r.holds = three_kernel || two_kernel;
  return r;
}

/// d -> s_d(G): number of subgroups of each order.
inline std::map<std::uint64_t, std::uint64_t> subgroup_counts_by_order(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& core : g.lattice_cores()) ++out[core.set.size()];
  return out;
}

/// s_{2^k}(G) <= s_{2^k}(D8 × C_2^{n-3}) for k = 0..n, when G is a 2-group of order 2^n,
/// n >= 3, with exponent other than 2. One report per k.
inline std::vector<BoundReport> check_tarnauceanu(const PermGroup& g) {
  if (!is_p_group(g, 2)) throw InvalidArgument("check_tarnauceanu requires a 2-group");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < g.order()) ++n;
  if (n < 3) throw InvalidArgument("check_tarnauceanu requires |G| >= 8");
  const bool applicable = exponent(g) != 2;
  const auto mine = subgroup_counts_by_order(g);
  const auto reference = subgroup_counts_by_order(families::d8_times_c2power(n - 3, g.limits()));
  std::vector<BoundReport> out;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t d = std::uint64_t{1} << k;
    BoundReport r;
    r.bound_name = "tarnauceanu(k=" + std::to_string(k) + ")";
    auto lookup = [d](const std::map<std::uint64_t, std::uint64_t>& m) {
      auto it = m.find(d);
      return Rational(static_cast<std::int64_t>(it == m.end() ? 0 : it->second));
    };
    r.lhs = lookup(mine);
    r.rhs = lookup(reference);
    r.applicable = applicable;
    r.holds = r.lhs <= r.rhs;
    out.push_back(std::move(r));
  }
  return out;
}

/// Every count bound whose preconditions the group meets.
inline std::vector<BoundReport> all_bound_checks(const PermGroup& g) {
  std::vector<BoundReport> out;
  for (std::uint64_t p : prime_divisors(g.order())) out.push_back(check_laffey_np(g, p));
  if (g.order() > 1 && is_p_group(g, 3)) out.push_back(check_laffey_3group(g));
  out.push_back(check_brandl_shi(g));
  if (g.order() >= 8 && is_p_group(g, 2))
    for (auto& r : check_tarnauceanu(g)) out.push_back(std::move(r));
  return out;
}

/// Applicable reports that fail.
inline std::size_t count_failures(const std::vector<BoundReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports)
    if (r.applicable && !r.holds) ++n;
  return n;
}

}  // namespace avgord
