#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "avgord/families.hpp"
#include "avgord/isomorphism.hpp"
#include "avgord/lattice.hpp"
#include "avgord/order_stats.hpp"
#include "avgord/structure.hpp"

namespace avgord {

/// The supersolvability threshold 31/12 = o(A4).
inline Rational supersolvable_threshold() { return Rational(31, 12); }

enum class Comparison { Below, Equal, Above };
enum class CaseTag { TwoGroupCase, C3Case, FrobeniusCase, NotApplicable };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Below: return "below";
    case Comparison::Equal: return "equal";
    case Comparison::Above: return "above";
  }
  return "?";
}

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::TwoGroupCase: return "two_group";
    case CaseTag::C3Case: return "c3";
    case CaseTag::FrobeniusCase: return "frobenius";
    case CaseTag::NotApplicable: return "none";
  }
  return "?";
}

inline Comparison compare(const Rational& value, const Rational& threshold) {
  if (value < threshold) return Comparison::Below;
  if (value == threshold) return Comparison::Equal;
  return Comparison::Above;
}

struct TwoGroupWitness {
  Subgroup derived;
  Subgroup frattini;
  std::uint64_t n2 = 0;
  Rational bound;  // 17/24 |G| - 3/2
};

struct FrobeniusWitness {
  Subgroup kernel;
  Subgroup complement;
  std::size_t m = 0;
};

using Witness = std::variant<std::monostate, TwoGroupWitness, FrobeniusWitness>;

struct ClassificationReport {
  Rational o_value;
  Comparison comparison = Comparison::Above;
  CaseTag case_tag = CaseTag::NotApplicable;
  Witness witnesses;
  bool supersolvable = false;
};

/// (5·3^m - 2) / (2·3^m).
inline Rational frobenius_o_formula(std::size_t m) {
  if (m == 0) throw InvalidArgument("m must be at least 1");
  BigInt t = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(m));
  return Rational(5 * t - 2, 2 * t);
}

/// o(C_{2^t}) = (2^{2t+1} + 1) / (3·2^t).
inline Rational o_cyclic_2t(std::size_t t) {
  if (t == 0) throw InvalidArgument("t must be at least 1");
  BigInt two_t = BigInt(1) << t;
  return Rational(2 * two_t * two_t + 1, 3 * two_t);
}

/// o(C_2^r ⋊ C_3) with a fixed-point-free C_3 = (2^{r+3} - 1) / (3·2^r).
inline Rational o_c2r_c3(std::size_t r) {
  if (r == 0) throw InvalidArgument("r must be at least 1");
  BigInt two_r = BigInt(1) << r;
  return Rational(8 * two_r - 1, 3 * two_r);
}

/// (21·3^r - 2) / (8·3^r).
inline Rational o_c3r_d8(std::size_t r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  BigInt t = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(r));
  return Rational(21 * t - 2, 8 * t);
}

/// Places a group relative to 31/12 and, below it, in exactly one of the three cases with
/// validated witnesses. Throws TheoremViolation if no case fits.
inline ClassificationReport classify(const PermGroup& g) {
  ClassificationReport rep;
  rep.o_value = avg_order(g);
  rep.comparison = compare(rep.o_value, supersolvable_threshold());
  rep.supersolvable = is_supersolvable(g);

  if (rep.comparison == Comparison::Equal) {
    if (g.order() != 12 || !is_isomorphic(g, families::alternating(4, g.limits())))
      throw TheoremViolation("o(G) = 31/12 but G is not isomorphic to A4");
    return rep;
  }
  if (rep.comparison == Comparison::Above) return rep;

  if (!rep.supersolvable) throw TheoremViolation("o(G) < 31/12 but G is not supersolvable");

  const auto spectrum = order_spectrum(g);
  if (is_p_group(g, 2)) {
    TwoGroupWitness w{derived_subgroup(g), frattini_subgroup(g), spectrum.count(2),
                      Rational(17, 24) * Rational(static_cast<std::int64_t>(g.order())) - Rational(3, 2)};
    if (!(w.derived == w.frattini)) throw TheoremViolation("2-group below 31/12 with G' != Phi(G)");
    if (!(Rational(static_cast<std::int64_t>(w.n2)) > w.bound))
      throw TheoremViolation("2-group below 31/12 with n2 <= 17/24 |G| - 3/2");
    rep.case_tag = CaseTag::TwoGroupCase;
    rep.witnesses = std::move(w);
    return rep;
  }
  if (g.order() == 3 && is_isomorphic(g, families::cyclic(3, g.limits()))) {
    rep.case_tag = CaseTag::C3Case;
    return rep;
  }
  auto dec = frobenius_decomposition(g);
  if (!dec || dec->complement.order() != 2 || !is_elementary_abelian(dec->kernel, 3))
    throw TheoremViolation("group below 31/12 fits none of the three cases");
  std::size_t m = 0;
  for (std::size_t k = dec->kernel.order(); k > 1; k /= 3) ++m;
  if (frobenius_o_formula(m) != rep.o_value)
    throw TheoremViolation("Frobenius case with o(G) != (5*3^m - 2)/(2*3^m)");
  rep.case_tag = CaseTag::FrobeniusCase;
  rep.witnesses = FrobeniusWitness{std::move(dec->kernel), std::move(dec->complement), m};
  return rep;
}

/// Facts evaluated for the main criterion: o < 31/12 implies supersolvable, and
/// o = 31/12 exactly for A4.
struct MainTheoremRecord {
  Rational o_value;
  Comparison comparison = Comparison::Above;
  bool supersolvable = false;
  bool isomorphic_to_a4 = false;
};

inline MainTheoremRecord verify_main_theorem(const PermGroup& g) {
  MainTheoremRecord rec;
  rec.o_value = avg_order(g);
  rec.comparison = compare(rec.o_value, supersolvable_threshold());
  rec.supersolvable = is_supersolvable(g);
  rec.isomorphic_to_a4 = g.order() == 12 && is_isomorphic(g, families::alternating(4, g.limits()));
  if (rec.comparison == Comparison::Below && !rec.supersolvable)
    throw TheoremViolation("o(G) < 31/12 but G is not supersolvable");
  if ((rec.comparison == Comparison::Equal) != rec.isomorphic_to_a4)
    throw TheoremViolation(rec.isomorphic_to_a4 ? "G is A4 but o(G) != 31/12" : "o(G) = 31/12 but G is not A4");
  return rec;
}

struct MultiplicativityRecord {
  Rational product_o;    // o(a × b), enumerated
  Rational o_a, o_b;
  bool holds = false;
};

/// o(a × b) = o(a) o(b) for coprime orders.
inline MultiplicativityRecord check_multiplicativity(const PermGroup& a, const PermGroup& b) {
  if (std::gcd(a.order(), b.order()) != 1)
    throw InvalidArgument("multiplicativity needs coprime orders, got " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()));
  MultiplicativityRecord rec;
  rec.product_o = avg_order(direct_product(a, b));
  rec.o_a = avg_order(a);
  rec.o_b = avg_order(b);
  rec.holds = rec.product_o == rec.o_a * rec.o_b;
  return rec;
}

struct QuotientComparison {
  std::size_t normal_order = 0;
  Rational quotient_o;
};

struct MonotonicityRecord {
  Rational o_value;
  std::vector<QuotientComparison> quotients;  // one per nontrivial normal subgroup
  bool holds = true;
};

/// o(G/X) < o(G) for every nontrivial normal X.
inline MonotonicityRecord check_quotient_monotonicity(const PermGroup& g) {
  MonotonicityRecord rec;
  rec.o_value = avg_order(g);
  for (const auto& n : normal_subgroups(g)) {
    if (n.is_trivial()) continue;
    QuotientComparison q{n.order(), avg_order(quotient(g, n))};
    if (!(q.quotient_o < rec.o_value)) rec.holds = false;
    rec.quotients.push_back(std::move(q));
  }
  return rec;
}

}  // namespace avgord
