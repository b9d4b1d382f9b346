#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "es_spectra/checks.hpp"
#include "es_spectra/chem.hpp"
#include "es_spectra/error.hpp"
#include "es_spectra/graph.hpp"
#include "es_spectra/indices.hpp"
#include "es_spectra/report.hpp"
#include "es_spectra/spectral.hpp"

namespace es_spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitCompute = 4;

inline constexpr const char* kTolEnv = "ES_SPECTRA_TOL";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string family;
  std::string scheme = "es";
  std::string format = "text";
  double tol = JacobiOptions{}.tol;
};

namespace detail {

inline Graph load_graph(const Options& o, std::istream& in) {
  if (o.input.empty() == o.family.empty())
    throw UsageError("exactly one of --input or --family is required");
  if (!o.family.empty()) {
    try {
      return generate(parse_family(o.family));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (o.input == "-") return parse_edge_list(in);
  std::ifstream file(o.input);
  if (!file) throw UsageError("cannot read input file '" + o.input + "'");
  return parse_edge_list(file);
}

inline SpectralOptions spectral_options(const Options& o) {
  SpectralOptions opts;
  opts.solver.tol = o.tol;
  return opts;
}

inline WeightScheme scheme_of(const Options& o) { return *parse_scheme(o.scheme); }

inline void print_json(std::ostream& out, const report::Json& j) { out << j.dump(2) << '\n'; }

inline std::string format_values(const std::vector<std::pair<std::string, double>>& values) {
  std::string s;
  for (const auto& [k, v] : values) {
    if (!s.empty()) s += ' ';
    s += k + "=" + report::fixed4(v);
  }
  return s;
}

inline std::string optional4(const std::optional<double>& v) {
  return v ? report::fixed4(*v) : std::string();
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_index(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = load_graph(o, in);
  const double value = index(g, scheme_of(o));
  if (o.format == "json") {
    print_json(out, {{"scheme", o.scheme}, {"n", g.order()}, {"index", report::number(value)}});
  } else if (o.format == "csv") {
    out << "scheme,n,index\n" << o.scheme << ',' << g.order() << ',' << report::fixed4(value) << '\n';
  } else {
    out << report::fixed4(value) << '\n';
  }
  return kExitOk;
}

inline int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = load_graph(o, in);
  const auto s = graph_spectrum(g, scheme_of(o), spectral_options(o).solver);
  if (o.format == "json") {
    print_json(out, report::spectrum(scheme_of(o), s));
  } else if (o.format == "csv") {
    out << "i,eigenvalue\n";
    for (std::size_t i = 0; i < s.size(); ++i) out << i + 1 << ',' << report::fixed4(s.values[i]) << '\n';
  } else {
    for (double v : s.values) out << report::fixed4(v) << '\n';
  }
  return kExitOk;
}

inline void print_bounds_text(std::ostream& out, const std::vector<BoundCheck>& bounds) {
  for (const auto& b : bounds) {
    out << (b.satisfied ? "PASS " : "FAIL ") << b.name << ": ";
    if (b.lower) out << report::fixed4(*b.lower) << (b.name == "radius_lower" ? " < " : " <= ");
    out << report::fixed4(b.observed);
    if (b.upper) out << " <= " << report::fixed4(*b.upper);
    if (b.attained) out << " (equality)";
    out << '\n';
  }
}

inline int cmd_energy(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = load_graph(o, in);
  const auto r = graph_energy(g, scheme_of(o), spectral_options(o));
  if (o.format == "json") {
    print_json(out, report::energy(r));
  } else if (o.format == "csv") {
    out << "scheme,n,energy,fi,sz,index\n"
        << o.scheme << ',' << g.order() << ',' << report::fixed4(r.energy) << ','
        << report::fixed4(r.fi) << ',' << report::fixed4(r.sz) << ','
        << report::fixed4(r.index_value) << '\n';
  } else {
    out << "scheme: " << o.scheme << '\n'
        << "n: " << g.order() << '\n'
        << "energy: " << report::fixed4(r.energy) << '\n'
        << "fi: " << report::fixed4(r.fi) << '\n'
        << "sz: " << report::fixed4(r.sz) << '\n'
        << "index: " << report::fixed4(r.index_value) << '\n';
    print_bounds_text(out, r.bound_checks);
  }
  return kExitOk;
}

inline int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = load_graph(o, in);
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "bounds require a connected graph");
  if (g.order() < 3) throw Error(ErrorCode::NotApplicable, "bounds require at least 3 vertices");
  const auto r = graph_energy(g, scheme_of(o), spectral_options(o));
  if (o.format == "json") {
    print_json(out, {{"scheme", o.scheme}, {"n", g.order()}, {"bounds", report::bounds(r.bound_checks)}});
  } else if (o.format == "csv") {
    out << "name,lower,observed,upper,pass\n";
    for (const auto& b : r.bound_checks)
      out << b.name << ',' << optional4(b.lower) << ',' << report::fixed4(b.observed) << ','
          << optional4(b.upper) << ',' << (b.satisfied ? "true" : "false") << '\n';
  } else {
    print_bounds_text(out, r.bound_checks);
  }
  const bool ok = std::all_of(r.bound_checks.begin(), r.bound_checks.end(),
                              [](const BoundCheck& b) { return b.satisfied; });
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = load_graph(o, in);
  const auto r = run_checks(g, spectral_options(o));
  if (o.format == "json") {
    print_json(out, report::checks(g.order(), r));
  } else if (o.format == "csv") {
    out << "name,pass,attained\n";
    for (const auto& c : r.items)
      out << c.name << ',' << (c.pass ? "true" : "false") << ',' << (c.attained ? "true" : "false")
          << '\n';
  } else {
    for (const auto& c : r.items) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << format_values(c.values);
      if (c.attained) out << " (equality)";
      out << '\n';
    }
    out << (r.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return r.all_pass() ? kExitOk : kExitCheckFailed;
}

/// Generates a family graph. Text output is the edge list itself, so the
/// result can be piped into another command with `--input -`.
inline int cmd_family(const Options& o, const std::string& spec, std::ostream& out) {
  GraphFamily family;
  try {
    family = parse_family(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto g = generate(family);
  if (o.format == "text") {
    out << to_edge_list(g);
    return kExitOk;
  }
  const auto scheme = scheme_of(o);
  const auto numeric = graph_spectrum(g, scheme, spectral_options(o).solver);
  std::optional<Spectrum> closed;
  if (scheme == WeightScheme::ES && family.kind != GraphFamily::Kind::Path)
    closed = closed_form_spectrum(family);
  double worst = 0.0;
  bool ok = true;
  if (closed) {
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      const double diff = std::abs(numeric.values[i] - closed->values[i]);
      worst = std::max(worst, diff);
      ok = ok && diff <= 1e-7 * (1.0 + std::abs(closed->values[i]));
    }
  }
  if (o.format == "json") {
    report::Json edges = report::Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    print_json(out, {{"family", to_string(family)},
                     {"scheme", o.scheme},
                     {"n", g.order()},
                     {"edges", edges},
                     {"closed_form", closed ? report::eigenvalues(*closed) : report::Json(nullptr)},
                     {"numeric", report::eigenvalues(numeric)},
                     {"max_abs_diff", closed ? report::number(worst) : report::Json(nullptr)},
                     {"pass", ok}});
  } else {
    out << "i,closed_form,numeric\n";
    for (std::size_t i = 0; i < numeric.size(); ++i)
      out << i + 1 << ',' << (closed ? report::fixed4(closed->values[i]) : std::string()) << ','
          << report::fixed4(numeric.values[i]) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_corpus(const Options& o, std::ostream& out) {
  const auto computed = chem::energy_table(spectral_options(o));
  const auto published = chem::published_energy_table();
  const auto cmp = chem::compare_with_published(computed);
  if (o.format == "csv") {
    out << chem::corpus_csv(computed);
    return kExitOk;
  }
  if (o.format == "json") {
    report::Json rows = report::Json::array();
    for (std::size_t i = 0; i < computed.size(); ++i) {
      rows.push_back({{"name", computed[i].name},
                      {"e_es", report::number(computed[i].e_es)},
                      {"e_fi", report::number(computed[i].e_fi)},
                      {"e_sz", report::number(computed[i].e_sz)},
                      {"published", {{"e_es", report::number(published[i].e_es)},
                                     {"e_fi", report::number(published[i].e_fi)},
                                     {"e_sz", report::number(published[i].e_sz)}}}});
    }
    report::Json mismatches = report::Json::array();
    for (const auto& m : cmp.mismatches)
      mismatches.push_back({{"name", m.name},
                            {"column", m.column},
                            {"computed", report::number(m.computed)},
                            {"published", report::number(m.published)},
                            {"relative_deviation", report::number(m.relative_deviation)}});
    print_json(out, {{"rows", rows},
                     {"rows_matching", cmp.rows_matching},
                     {"rows_total", cmp.rows_total},
                     {"mismatches", mismatches}});
    return kExitOk;
  }
  out << std::left << std::setw(28) << "molecule" << std::right;
  for (const char* h : {"E_ES", "pub", "E_FI", "pub", "E_SZ", "pub"})
    out << std::setw(10) << h;
  out << '\n';
  for (std::size_t i = 0; i < computed.size(); ++i) {
    out << std::left << std::setw(28) << computed[i].name << std::right;
    for (double v : {computed[i].e_es, published[i].e_es, computed[i].e_fi, published[i].e_fi,
                     computed[i].e_sz, published[i].e_sz})
      out << std::setw(10) << report::fixed4(v);
    out << '\n';
  }
  out << "rows within 1% of published: " << cmp.rows_matching << " of " << cmp.rows_total << '\n';
  for (const auto& m : cmp.mismatches)
    out << "mismatch: " << m.name << ' ' << m.column << " computed " << report::fixed4(m.computed)
        << " published " << report::fixed4(m.published) << " ("
        << report::fixed4(100.0 * m.relative_deviation) << "%)\n";
  return kExitOk;
}

inline int cmd_correlate(const Options& o, std::ostream& out) {
  const auto opts = spectral_options(o);
  const std::vector<chem::CorrelationReport> reports{
      chem::correlation_report(chem::CorrelationSource::PaperTable, opts),
      chem::correlation_report(chem::CorrelationSource::Computed, opts)};

  if (o.format == "csv") {
    out << "source,group,x,y,r\n";
    for (const auto& r : reports)
      for (const auto& p : r.pairs)
        out << chem::to_string(r.source) << ',' << p.group << ',' << p.x_label << ',' << p.y_label
            << ',' << report::fixed4(p.r) << '\n';
    return kExitOk;
  }
  if (o.format == "json") {
    report::Json arr = report::Json::array();
    for (const auto& r : reports) {
      auto j = report::correlations(r);
      report::Json matches = report::Json::array();
      for (const auto& m : chem::match_es_property_row(r))
        matches.push_back({{"interpretation", m.interpretation},
                           {"max_abs_deviation", report::number(m.max_abs_deviation)},
                           {"matches", m.matches}});
      j["es_property_row_match"] = matches;
      arr.push_back(j);
    }
    print_json(out, {{"reports", arr}});
    return kExitOk;
  }
  for (const auto& r : reports) {
    out << "source: " << chem::to_string(r.source) << '\n';
    for (std::size_t s = 0; s < 2; ++s) {
      const auto& p = r.pairs[s];
      out << "  " << p.x_label << " vs " << p.y_label << ": " << report::fixed4(p.r)
          << " (published " << report::fixed4(chem::kPublishedEnergyCorrelation[s]) << ")\n";
    }
    for (const char* group : {"energy_vs_property", "index_vs_property"}) {
      out << "  " << group << ":\n    " << std::setw(6) << "";
      for (auto label : chem::kPropertyLabels) out << std::setw(10) << label;
      out << '\n';
      std::string row_label;
      for (const auto& p : r.pairs) {
        if (p.group != group) continue;
        if (p.x_label != row_label) {
          if (!row_label.empty()) out << '\n';
          row_label = p.x_label;
          out << "    " << std::left << std::setw(6) << row_label << std::right;
        }
        out << std::setw(10) << report::fixed4(p.r);
      }
      out << '\n';
    }
    for (const auto& m : chem::match_es_property_row(r))
      out << "  ES row vs published (" << m.interpretation << "): max deviation "
          << report::fixed4(m.max_abs_deviation) << (m.matches ? " -> matches" : " -> no match")
          << '\n';
  }
  return kExitOk;
}

}  // namespace detail

/// Runs the command line `args` (program name excluded). Reports go to
/// `out`, diagnostics to `err`; `in` backs `--input -`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Degree-weighted graph spectra, energies and their bounds", "es_spectra"};
  app.require_subcommand(1);

  Options o;
  if (const char* env = std::getenv(kTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      err << "error: " << kTolEnv << " must be a positive number, got '" << env << "'\n";
      return kExitUsage;
    }
    o.tol = v;
  }
  std::string family_spec;

  auto add_common = [&](CLI::App* sub, bool graph_input) {
    if (graph_input) {
      auto* input = sub->add_option("--input", o.input, "edge-list file, '-' for stdin");
      auto* family = sub->add_option("--family", o.family,
                                     "family spec: complete:N cycle:N path:N star:N bipartite:M:N");
      input->excludes(family);
    }
    sub->add_option("--scheme", o.scheme, "edge weight: es, so, fi, sz, adj")
        ->check(CLI::IsMember({"es", "so", "fi", "sz", "adj"}));
    sub->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", o.tol, "relative eigensolver tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* index_cmd = app.add_subcommand("index", "topological index of the graph");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the weighted matrix");
  auto* energy_cmd = app.add_subcommand("energy", "energy report with bound checks");
  auto* bounds_cmd = app.add_subcommand("bounds", "energy and spectral-radius bounds");
  auto* check_cmd = app.add_subcommand("check", "every applicable identity and bound");
  auto* family_cmd = app.add_subcommand("family", "generate a family graph and its closed form");
  auto* corpus_cmd = app.add_subcommand("corpus", "octane isomer energy table");
  auto* correlate_cmd = app.add_subcommand("correlate", "octane isomer correlation tables");
  for (auto* sub : {index_cmd, spectrum_cmd, energy_cmd, bounds_cmd, check_cmd})
    add_common(sub, true);
  for (auto* sub : {family_cmd, corpus_cmd, correlate_cmd}) add_common(sub, false);
  family_cmd->add_option("spec", family_spec, "family spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*index_cmd) return detail::cmd_index(o, in, out);
    if (*spectrum_cmd) return detail::cmd_spectrum(o, in, out);
    if (*energy_cmd) return detail::cmd_energy(o, in, out);
    if (*bounds_cmd) return detail::cmd_bounds(o, in, out);
    if (*check_cmd) return detail::cmd_check(o, in, out);
    if (*family_cmd) return detail::cmd_family(o, family_spec, out);
    if (*corpus_cmd) return detail::cmd_corpus(o, out);
    if (*correlate_cmd) return detail::cmd_correlate(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::NoConvergence:
      case ErrorCode::NotConnected:
      case ErrorCode::Disconnected:
      case ErrorCode::NotApplicable:
        return kExitCompute;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace es_spectra::cli
