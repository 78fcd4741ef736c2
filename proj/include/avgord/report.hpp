#pragma once

#include <array>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avgord/census.hpp"

namespace avgord {

enum class ReportFormat { Table, Csv, Structured };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "structured") return ReportFormat::Structured;
  throw InvalidArgument("unknown report format '" + std::string(s) + "'");
}

namespace detail {

inline constexpr std::array<std::string_view, 15> kReportFields = {
    "order", "index",    "name",  "psi",      "o_num",          "o_den",  "comparison", "case",
    "supersolvable", "solvable", "nilpotent", "abelian", "bound_failures", "status", "message"};

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline std::vector<std::string> row_fields(const CensusRow& r) {
  return {std::to_string(r.order), std::to_string(r.index), r.name,
          r.psi.str(),             r.o.num().str(),          r.o.den().str(),
          to_string(r.comparison), to_string(r.case_tag),    yes_no(r.supersolvable),
          yes_no(r.solvable),      yes_no(r.nilpotent),      yes_no(r.abelian),
          std::to_string(r.bound_failures), to_string(r.status), r.message};
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Backslash escaping so any value fits on one line.
inline std::string escape_value(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else if (c == '\r') out += "\\r";
    else out += c;
  }
  return out;
}

inline std::string unescape_value(std::string_view s, std::size_t line) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) throw ParseError("dangling escape", line);
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: throw ParseError("unknown escape", line);
    }
  }
  return out;
}

template <class Enum, std::size_t N>
Enum enum_from(std::string_view s, const std::array<Enum, N>& all, std::size_t line, const char* what) {
  for (Enum e : all)
    if (s == to_string(e)) return e;
  throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
}

inline bool bool_from(std::string_view s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true or false, got '" + std::string(s) + "'", line);
}

inline BigInt bigint_from(std::string_view s, std::size_t line) {
  std::string_view digits = s.starts_with('-') ? s.substr(1) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("bad integer '" + std::string(s) + "'", line);
  return BigInt(std::string(s));
}

inline std::string emit_table(const std::vector<CensusRow>& rows) {
  const std::vector<std::string> head = {"order", "idx", "name", "psi", "o", "o~", "cmp", "case",
                                         "ss", "sol", "nil", "ab", "bnd", "status"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.order), std::to_string(r.index), r.name, r.psi.str(), r.o.str(),
                     r.o.decimal(6), to_string(r.comparison), to_string(r.case_tag), r.supersolvable ? "y" : "n",
                     r.solvable ? "y" : "n", r.nilpotent ? "y" : "n", r.abelian ? "y" : "n",
                     std::to_string(r.bound_failures), to_string(r.status)});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      if (c + 1 < line.size()) out << "  ";
    }
    out << '\n';
  }
  for (const auto& r : rows)
    if (!r.message.empty()) out << r.order << '/' << r.index << ": " << r.message << '\n';
  return out.str();
}

}  // namespace detail

/// Renders rows in the requested format. Rows are expected in (order, index) order, as
/// run_census returns them.
inline std::string emit_report(const std::vector<CensusRow>& rows, ReportFormat format,
                               const Rational& threshold = supersolvable_threshold()) {
  if (format == ReportFormat::Table) return detail::emit_table(rows);
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    for (std::size_t i = 0; i < detail::kReportFields.size(); ++i)
      out << (i ? "," : "") << detail::kReportFields[i];
    out << '\n';
    for (const auto& r : rows) {
      auto f = detail::row_fields(r);
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << detail::csv_quote(f[i]);
      out << '\n';
    }
    return out.str();
  }
  out << "format=avgord-census-1\n"
      << "threshold=" << threshold.str() << '\n'
      << "rows=" << rows.size() << '\n';
  for (const auto& r : rows) {
    out << '\n';
    auto f = detail::row_fields(r);
    for (std::size_t i = 0; i < f.size(); ++i)
      out << detail::kReportFields[i] << '=' << detail::escape_value(f[i]) << '\n';
  }
  return out.str();
}

struct StructuredReport {
  Rational threshold;
  std::vector<CensusRow> rows;
};

/// Inverse of emit_report(..., Structured).
inline StructuredReport parse_structured_report(std::string_view text) {
  StructuredReport rep;
  std::vector<std::map<std::string, std::string, std::less<>>> blocks(1);
  std::vector<std::size_t> block_line{1};
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty()) {
      if (!blocks.back().empty()) {
        blocks.emplace_back();
        block_line.push_back(line_no + 1);
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no);
    std::string key(line.substr(0, eq));
    if (!blocks.back().emplace(key, detail::unescape_value(line.substr(eq + 1), line_no)).second)
      throw ParseError("duplicate key '" + key + "'", line_no);
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (blocks.empty()) throw ParseError("missing report header", 1);

  auto field = [](const auto& block, std::string_view key, std::size_t line) -> const std::string& {
    auto it = block.find(key);
    if (it == block.end()) throw ParseError("missing field '" + std::string(key) + "'", line);
    return it->second;
  };
  const auto& header = blocks.front();
  if (field(header, "format", 1) != "avgord-census-1") throw ParseError("unsupported report format", 1);
  try {
    rep.threshold = Rational::parse(field(header, "threshold", 1));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1);
  }
  const auto declared = detail::bigint_from(field(header, "rows", 1), 1);
  if (declared != BigInt(blocks.size() - 1)) throw ParseError("row count does not match header", 1);

  constexpr std::array comparisons{Comparison::Below, Comparison::Equal, Comparison::Above};
  constexpr std::array cases{CaseTag::TwoGroupCase, CaseTag::C3Case, CaseTag::FrobeniusCase, CaseTag::NotApplicable};
  constexpr std::array statuses{RowStatus::Ok, RowStatus::Violation, RowStatus::Error};
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    const std::size_t ln = block_line[b];
    if (blk.size() != detail::kReportFields.size()) throw ParseError("row has unexpected fields", ln);
    CensusRow r;
    r.order = static_cast<std::uint64_t>(detail::bigint_from(field(blk, "order", ln), ln));
    r.index = static_cast<std::uint64_t>(detail::bigint_from(field(blk, "index", ln), ln));
    r.name = field(blk, "name", ln);
    r.psi = detail::bigint_from(field(blk, "psi", ln), ln);
    const BigInt den = detail::bigint_from(field(blk, "o_den", ln), ln);
    if (den <= 0) throw ParseError("o_den must be positive", ln);
    r.o = Rational(detail::bigint_from(field(blk, "o_num", ln), ln), den);
    r.comparison = detail::enum_from(field(blk, "comparison", ln), comparisons, ln, "comparison");
    r.case_tag = detail::enum_from(field(blk, "case", ln), cases, ln, "case");
    r.supersolvable = detail::bool_from(field(blk, "supersolvable", ln), ln);
    r.solvable = detail::bool_from(field(blk, "solvable", ln), ln);
    r.nilpotent = detail::bool_from(field(blk, "nilpotent", ln), ln);
    r.abelian = detail::bool_from(field(blk, "abelian", ln), ln);
    r.bound_failures = static_cast<std::size_t>(detail::bigint_from(field(blk, "bound_failures", ln), ln));
    r.status = detail::enum_from(field(blk, "status", ln), statuses, ln, "status");
    r.message = field(blk, "message", ln);
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace avgord
