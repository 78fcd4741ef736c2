#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avgord/isomorphism.hpp"
#include "avgord/order_stats.hpp"
#include "avgord/structure.hpp"

namespace avgord {

/// Catalog content that contradicts itself: wrong order, isomorphic duplicates, failed expectations.
class CatalogError : public Error {
 public:
  using Error::Error;
};

struct ExpectedInvariants {
  std::optional<OrderSpectrum> spectrum;
  std::optional<bool> abelian;
  std::optional<bool> supersolvable;
};

/// A named small group given by generators.
struct CatalogEntry {
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  std::string name;
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::optional<ExpectedInvariants> expected;
  std::size_t line = 0;  // header line in the source text

  std::string id() const { return std::to_string(order) + "/" + std::to_string(index); }
  std::string label() const { return id() + " (" + name + ")"; }

  PermGroup group(Limits limits = {}) const { return PermGroup(generators, limits); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line, const char* what) {
  if (s.empty()) throw ParseError(std::string("missing ") + what, line);
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

inline bool parse_flag(std::string_view s, std::size_t line) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw ParseError("expected 0 or 1, got '" + std::string(s) + "'", line);
}

inline OrderSpectrum parse_spectrum(std::string_view s, std::size_t line) {
  std::map<std::uint64_t, std::uint64_t> counts;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto item = s.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("spectrum item needs 'order:count'", line);
    counts[parse_uint(item.substr(0, colon), line, "spectrum order")] =
        parse_uint(item.substr(colon + 1), line, "spectrum count");
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
  }
  return OrderSpectrum(std::move(counts));
}

inline ExpectedInvariants parse_expect(std::string_view rest, std::size_t line) {
  ExpectedInvariants e;
  std::istringstream in{std::string(rest)};
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expect item needs key=value", line);
    std::string_view key(tok.data(), eq), value(tok.data() + eq + 1, tok.size() - eq - 1);
    if (key == "spectrum") e.spectrum = parse_spectrum(value, line);
    else if (key == "abelian") e.abelian = parse_flag(value, line);
    else if (key == "supersolvable") e.supersolvable = parse_flag(value, line);
    else throw ParseError("unknown expect key '" + std::string(key) + "'", line);
  }
  return e;
}

}  // namespace detail

/// Parses catalog text (no group-theoretic validation).
///
/// Grammar: blocks separated by blank lines; '#' starts a comment line. A block is a header
/// `order/index/name/degree`, one or more generator lines in disjoint-cycle notation, and an
/// optional final `expect key=value ...` line with keys spectrum (d:n,...), abelian, supersolvable.
inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::optional<CatalogEntry> cur;
  bool expect_seen = false;
  auto finish = [&](std::size_t line) {
    if (!cur) return;
    if (cur->generators.empty()) throw ParseError("entry " + cur->id() + " has no generators", line);
    out.push_back(std::move(*cur));
    cur.reset();
  };
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto line = detail::trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      finish(line_no);
      continue;
    }
    if (!cur) {
      std::vector<std::string_view> parts;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= line.size(); ++i)
        if (i == line.size() || line[i] == '/') {
          parts.push_back(line.substr(start, i - start));
          start = i + 1;
        }
      if (parts.size() != 4) throw ParseError("header must be order/index/name/degree", line_no);
      CatalogEntry e;
      e.order = detail::parse_uint(parts[0], line_no, "order");
      e.index = detail::parse_uint(parts[1], line_no, "index");
      e.name = std::string(parts[2]);
      e.degree = detail::parse_uint(parts[3], line_no, "degree");
      e.line = line_no;
      if (e.order == 0 || e.index == 0 || e.degree == 0)
        throw ParseError("order, index and degree must be positive", line_no);
      if (e.name.empty()) throw ParseError("empty group name", line_no);
      cur = std::move(e);
      expect_seen = false;
      continue;
    }
    if (expect_seen) throw ParseError("nothing may follow the expect line", line_no);
    if (line.front() == '(') {
      try {
        cur->generators.push_back(Permutation::from_cycles(line, cur->degree));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (line.starts_with("expect ") || line == "expect") {
      if (cur->generators.empty()) throw ParseError("expect line before any generator", line_no);
      cur->expected = detail::parse_expect(line.substr(6), line_no);
      expect_seen = true;
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'", line_no);
    }
  }
  finish(line_no);
  return out;
}

/// Checks orders, uniqueness of ids, pairwise non-isomorphism within each order, and
/// any expected invariants. Throws CatalogError naming the offending entries.
inline void validate_catalog(const std::vector<CatalogEntry>& entries, Limits limits = {}) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> ids;
  std::map<std::uint64_t, std::vector<std::pair<std::size_t, PermGroup>>> by_order;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!ids.emplace(std::pair{e.order, e.index}, i).second)
      throw CatalogError("duplicate entry id " + e.id() + " at line " + std::to_string(e.line));
    PermGroup g = e.group(limits);
    if (g.order() != e.order)
      throw CatalogError("entry " + e.label() + " generates a group of order " + std::to_string(g.order()) +
                         ", expected " + std::to_string(e.order));
    if (e.expected) {
      const auto& x = *e.expected;
      if (x.spectrum && !(*x.spectrum == order_spectrum(g)))
        throw CatalogError("entry " + e.label() + ": order spectrum differs from the expected one");
      if (x.abelian && *x.abelian != is_abelian(g))
        throw CatalogError("entry " + e.label() + ": abelian flag differs from the expected one");
      if (x.supersolvable && *x.supersolvable != is_supersolvable(g))
        throw CatalogError("entry " + e.label() + ": supersolvable flag differs from the expected one");
    }
    by_order[e.order].emplace_back(i, std::move(g));
  }
  for (const auto& [order, groups] : by_order)
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b)
        if (is_isomorphic(groups[a].second, groups[b].second))
          throw CatalogError("entries " + entries[groups[a].first].label() + " and " +
                             entries[groups[b].first].label() + " are isomorphic");
}

/// Reads, parses and validates a catalog file.
inline std::vector<CatalogEntry> load_catalog(const std::string& path, Limits limits = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto entries = parse_catalog(buf.str());
  validate_catalog(entries, limits);
  return entries;
}

}  // namespace avgord
