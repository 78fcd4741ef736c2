#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "avgord/bounds.hpp"
#include "avgord/catalog.hpp"
#include "avgord/classifier.hpp"

namespace avgord {

enum class RowStatus { Ok, Violation, Error };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Violation: return "violation";
    case RowStatus::Error: return "error";
  }
  return "?";
}

/// One catalog entry evaluated against a threshold.
///
/// `comparison` is relative to the run's threshold. `case_tag` always refers to the
/// classification at 31/12, so changing the threshold never changes it.
struct CensusRow {
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  std::string name;
  BigInt psi = 0;
  Rational o;
  Comparison comparison = Comparison::Above;
  CaseTag case_tag = CaseTag::NotApplicable;
  bool supersolvable = false;
  bool solvable = false;
  bool nilpotent = false;
  bool abelian = false;
  std::size_t bound_failures = 0;
  RowStatus status = RowStatus::Ok;
  std::string message;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Evaluates one entry. Theorem violations and bound failures become `violation`; cap and
/// other library errors become `error`. Nothing escapes.
inline CensusRow evaluate_entry(const CatalogEntry& entry, const Rational& threshold, Limits limits = {}) {
  CensusRow row;
  row.order = entry.order;
  row.index = entry.index;
  row.name = entry.name;
  try {
    PermGroup g = entry.group(limits);
    row.psi = psi(g);
    row.o = avg_order(g);
    row.comparison = compare(row.o, threshold);
    row.supersolvable = is_supersolvable(g);
    row.solvable = is_solvable(g);
    row.nilpotent = is_nilpotent(g);
    row.abelian = is_abelian(g);
    try {
      verify_main_theorem(g);
      row.case_tag = classify(g).case_tag;
    } catch (const TheoremViolation& e) {
      row.status = RowStatus::Violation;
      row.message = e.what();
    }
    row.bound_failures = count_failures(all_bound_checks(g));
    if (row.bound_failures > 0 && row.status == RowStatus::Ok) {
      row.status = RowStatus::Violation;
      row.message = std::to_string(row.bound_failures) + " bound check(s) failed";
    }
  } catch (const std::exception& e) {
    row.status = RowStatus::Error;
    row.message = e.what();
  }
  return row;
}

/// One row per entry, ordered by (order, index). Up to `jobs` worker threads pull entries
/// from a shared counter; each writes only its own slot.
inline std::vector<CensusRow> run_census(const std::vector<CatalogEntry>& entries, const Rational& threshold,
                                         Limits limits = {}, unsigned jobs = 1) {
  std::vector<CensusRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) rows[i] = evaluate_entry(entries[i], threshold, limits);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return std::pair{a.order, a.index} < std::pair{b.order, b.index};
  });
  return rows;
}

inline std::size_t count_status(const std::vector<CensusRow>& rows, RowStatus s) {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const CensusRow& r) { return r.status == s; }));
}

}  // namespace avgord
