#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "avgord/avgord.hpp"

#ifndef AVGORD_DEFAULT_CATALOG
#define AVGORD_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace {

using namespace avgord;

struct Options {
  Limits limits;
  std::string catalog = AVGORD_DEFAULT_CATALOG;
  bool seedless = false;
};

struct Target {
  std::string label;
  PermGroup group;
};

/// Splits inline generator text on ';' or ',' outside parentheses.
std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ';' || c == ',')) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::erase_if(out, [](const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; });
  return out;
}

std::size_t inline_degree(const std::string& text) {
  std::size_t best = 0, value = 0;
  bool in_number = false;
  for (char c : text + " ") {
    if (c >= '0' && c <= '9') {
      value = in_number ? value * 10 + static_cast<std::size_t>(c - '0') : static_cast<std::size_t>(c - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, value + 1);
      in_number = false;
    }
  }
  return std::max<std::size_t>(best, 1);
}

/// `order/index`, a catalog name, or inline generators such as "(0 1 2);(0 1)".
Target resolve(const std::string& spec, const Options& opt) {
  if (spec.find('(') != std::string::npos) {
    const std::size_t degree = inline_degree(spec);
    std::vector<Permutation> gens;
    for (const auto& part : split_generators(spec)) gens.push_back(Permutation::from_cycles(part, degree));
    if (gens.empty()) throw InvalidArgument("no generators in '" + spec + "'");
    return {spec, PermGroup(gens, opt.limits)};
  }
  const auto entries = load_catalog(opt.catalog, opt.limits);
  for (const auto& e : entries)
    if (e.id() == spec || e.name == spec) return {e.label(), e.group(opt.limits)};
  throw InvalidArgument("no catalog entry '" + spec + "' in " + opt.catalog);
}

std::string subgroup_text(const Subgroup& h) {
  std::string gens;
  for (ElemId x : h.generators()) gens += (gens.empty() ? "" : " ") + h.parent().element(x).cycles();
  return "order " + std::to_string(h.order()) + (gens.empty() ? "" : ", generators " + gens);
}

int print_stats(const Target& t) {
  const auto& g = t.group;
  const auto spec = order_spectrum(g);
  const auto o = avg_order(g);
  std::cout << "group:    " << t.label << "\n"
            << "degree:   " << g.degree() << "\n"
            << "order:    " << g.order() << "\n"
            << "spectrum:";
  for (const auto& [d, n] : spec.entries()) std::cout << ' ' << d << ':' << n;
  std::cout << "\npsi:      " << psi(g) << "\n"
            << "o:        " << o << " (" << o.decimal(6) << ")\n";
  return 0;
}

int print_classify(const Target& t) {
  auto rep = classify(t.group);
  std::cout << "group:         " << t.label << "\n"
            << "o:             " << rep.o_value << " (" << rep.o_value.decimal(6) << ")\n"
            << "vs 31/12:      " << to_string(rep.comparison) << "\n"
            << "case:          " << to_string(rep.case_tag) << "\n"
            << "supersolvable: " << (rep.supersolvable ? "yes" : "no") << "\n";
  if (const auto* w = std::get_if<TwoGroupWitness>(&rep.witnesses)) {
    std::cout << "derived:       " << subgroup_text(w->derived) << "\n"
              << "frattini:      " << subgroup_text(w->frattini) << "\n"
              << "n2:            " << w->n2 << " > " << w->bound << "\n";
  } else if (const auto* f = std::get_if<FrobeniusWitness>(&rep.witnesses)) {
    std::cout << "kernel:        " << subgroup_text(f->kernel) << "\n"
              << "complement:    " << subgroup_text(f->complement) << "\n"
              << "m:             " << f->m << "\n";
  }
  return 0;
}

int print_verify(const Target& t) {
  const auto& g = t.group;
  auto rec = verify_main_theorem(g);
  std::cout << "group:           " << t.label << "\n"
            << "o:               " << rec.o_value << " (" << to_string(rec.comparison) << " 31/12)\n"
            << "supersolvable:   " << (rec.supersolvable ? "yes" : "no") << "\n"
            << "isomorphic to A4: " << (rec.isomorphic_to_a4 ? "yes" : "no") << "\n"
            << "main criterion:  holds\n";
  bool ok = true;
  auto mono = check_quotient_monotonicity(g);
  std::cout << "quotients:       " << mono.quotients.size() << " checked, o(G/X) < o(G) "
            << (mono.holds ? "holds" : "FAILS") << "\n";
  ok = ok && mono.holds;
  // A coprime direct decomposition G = A x B lets o(G) = o(A) o(B) be checked.
  const auto normals = normal_subgroups(g);
  std::size_t pairs = 0;
  for (const auto& a : normals)
    for (const auto& b : normals) {
      if (a.is_trivial() || b.is_trivial() || !lex_less(a, b)) continue;
      if (a.order() * b.order() != g.order() || std::gcd(a.order(), b.order()) != 1) continue;
      ++pairs;
      const bool holds = avg_order(a.as_group()) * avg_order(b.as_group()) == avg_order(g);
      std::cout << "product " << a.order() << " x " << b.order() << ":   o(A) o(B) = o(G) " << (holds ? "holds" : "FAILS")
                << "\n";
      ok = ok && holds;
    }
  if (pairs == 0) std::cout << "product:         no coprime direct decomposition\n";
  return ok ? 0 : 1;
}

int print_bounds(const Target& t) {
  const auto reports = all_bound_checks(t.group);
  std::cout << "group: " << t.label << "\n";
  for (const auto& r : reports) {
    std::cout << "  " << r.bound_name << ": ";
    if (!r.applicable) {
      std::cout << "not applicable\n";
      continue;
    }
    std::cout << r.lhs << " vs " << r.rhs << " -> " << (r.holds ? "holds" : "FAILS") << "\n";
  }
  const auto failures = count_failures(reports);
  std::cout << "failures: " << failures << "\n";
  return failures == 0 ? 0 : 1;
}

PermGroup build_family(const std::string& name, const std::vector<std::size_t>& p, const Limits& limits) {
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw InvalidArgument("family '" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                            std::to_string(p.size()));
  };
  if (name == "cyclic") return need(1), families::cyclic(p[0], limits);
  if (name == "elementary_abelian") return need(2), families::elementary_abelian(p[0], p[1], limits);
  if (name == "dihedral") return need(1), families::dihedral(p[0], limits);
  if (name == "quaternion8") return need(0), families::quaternion8(limits);
  if (name == "symmetric") return need(1), families::symmetric(p[0], limits);
  if (name == "alternating") return need(1), families::alternating(p[0], limits);
  if (name == "frobenius32") return need(1), families::frobenius_3m_2(p[0], limits);
  if (name == "fpf_c3_on_c2") return need(1), families::fpf_c3_on_c2(p[0], limits);
  if (name == "d8xc2") return need(1), families::d8_times_c2power(p[0], limits);
  if (name == "c3sq_d8") return need(0), families::c3sq_d8(limits);
  throw InvalidArgument("unknown family '" + name +
                        "' (cyclic, elementary_abelian, dihedral, quaternion8, symmetric, alternating, frobenius32, "
                        "fpf_c3_on_c2, d8xc2, c3sq_d8)");
}

int run_census_command(const Options& opt, const std::string& threshold_text, const std::string& format_text,
                       unsigned jobs) {
  const auto threshold = Rational::parse(threshold_text);
  const auto format = parse_report_format(format_text);
  const auto entries = load_catalog(opt.catalog, opt.limits);
  const auto rows = run_census(entries, threshold, opt.limits, jobs);
  std::cout << emit_report(rows, format, threshold);
  const auto violations = count_status(rows, RowStatus::Violation);
  const auto errors = count_status(rows, RowStatus::Error);
  std::cerr << rows.size() << " rows, " << violations << " violation(s), " << errors << " error(s)\n";
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average element order toolkit for finite permutation groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-order", opt.limits.max_order, "Largest group whose elements are enumerated")
      ->capture_default_str();
  app.add_option("--lattice-cap", opt.limits.lattice_cap, "Largest group whose full subgroup lattice is built")
      ->capture_default_str();
  app.add_option("--iso-cap", opt.limits.iso_cap, "Largest order for isomorphism search")->capture_default_str();
  app.add_option("--catalog", opt.catalog, "Catalog file")->capture_default_str();
  app.add_flag("--seedless", opt.seedless, "Accepted for compatibility; every computation is deterministic");

  std::string entry;
  auto* stats = app.add_subcommand("stats", "Order spectrum, psi and o");
  auto* cls = app.add_subcommand("classify", "Position relative to 31/12 with structural witnesses");
  auto* verify = app.add_subcommand("verify", "Main criterion plus product and quotient checks");
  auto* bounds = app.add_subcommand("bounds", "Element- and subgroup-count bounds");
  for (auto* sc : {stats, cls, verify, bounds})
    sc->add_option("entry", entry, "order/index, catalog name, or generators like \"(0 1 2);(0 1)\"")->required();

  auto* census = app.add_subcommand("census", "Evaluate every catalog entry");
  std::string threshold = "31/12", format = "table";
  unsigned jobs = 1;
  census->add_option("--catalog", opt.catalog, "Catalog file");
  census->add_option("--threshold", threshold, "Comparison threshold p/q")->capture_default_str();
  census->add_option("--format", format, "table, csv or structured")
      ->check(CLI::IsMember({"table", "csv", "structured"}))
      ->capture_default_str();
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  auto* fam = app.add_subcommand("families", "Build a family member and print its statistics");
  std::string family;
  std::vector<std::size_t> params;
  fam->add_option("name", family, "Family name")->required();
  fam->add_option("params", params, "Integer parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stats) return print_stats(resolve(entry, opt));
    if (*cls) return print_classify(resolve(entry, opt));
    if (*verify) return print_verify(resolve(entry, opt));
    if (*bounds) return print_bounds(resolve(entry, opt));
    if (*census) return run_census_command(opt, threshold, format, jobs);
    if (*fam) {
      std::string label = family;
      for (auto v : params) label += " " + std::to_string(v);
      return print_stats(Target{label, build_family(family, params, opt.limits)});
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
