#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "es_spectra/graph.hpp"
#include "es_spectra/spectral.hpp"

namespace es_spectra {

struct CheckItem {
  std::string name;
  bool pass = false;
  bool attained = false;
  std::vector<std::pair<std::string, double>> values;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
  }
};

namespace detail {

inline CheckItem compare_spectra(std::string name, const Spectrum& numeric, const Spectrum& expected,
                                 double tol) {
  CheckItem item;
  item.name = std::move(name);
  double worst = 0.0;
  bool ok = numeric.size() == expected.size();
  for (std::size_t i = 0; ok && i < numeric.size(); ++i) {
    const double diff = std::abs(numeric.values[i] - expected.values[i]);
    worst = std::max(worst, diff);
    ok = diff <= tol * (1.0 + std::abs(expected.values[i]));
  }
  item.pass = ok;
  item.values = {{"max_abs_diff", worst}};
  return item;
}

}  // namespace detail

/// Every identity, bound and characterization that applies to `g`.
/// Throws NotConnected for disconnected input.
inline CheckReport run_checks(const Graph& g, const SpectralOptions& opts = {}) {
  detail::require_connected(g, "check");
  CheckReport report;
  auto& items = report.items;
  const auto structure = classify(g);
  const std::size_t n = g.order();
  const auto es = graph_energy(g, WeightScheme::ES, opts);
  const auto distinct = distinct_eigenvalues(es.spectrum, opts.cluster_tol);

  if (n >= 3) {
    const auto t = verify_trace_identities(g, opts);
    items.push_back({"trace_identities",
                     t.pass,
                     false,
                     {{"sum", t.sum},
                      {"sum_sq", t.sum_sq},
                      {"expected_sum_sq", t.expected_sum_sq},
                      {"pair_sum", t.pair_sum}}});
    for (const auto& b : es.bound_checks) {
      CheckItem item{b.name, b.satisfied, b.attained, {}};
      if (b.lower) item.values.emplace_back("lower", *b.lower);
      item.values.emplace_back("observed", b.observed);
      if (b.upper) item.values.emplace_back("upper", *b.upper);
      items.push_back(std::move(item));
    }
  }

  const auto d = diameter_bound_check(g, opts);
  items.push_back({"diameter_bound",
                   d.pass,
                   false,
                   {{"diameter", static_cast<double>(d.diam)},
                    {"distinct", static_cast<double>(d.distinct)}}});

  if (n >= 2) {
    const bool two = distinct.count == 2;
    items.push_back({"two_distinct_iff_complete",
                     two == structure.complete,
                     false,
                     {{"distinct", static_cast<double>(distinct.count)},
                      {"complete", structure.complete ? 1.0 : 0.0}}});
  }
  if (n >= 3 && structure.bipartite) {
    const bool three = distinct.count == 3;
    const bool kmn = structure.complete_bipartite.has_value();
    items.push_back({"three_distinct_iff_complete_bipartite",
                     three == kmn,
                     false,
                     {{"distinct", static_cast<double>(distinct.count)},
                      {"complete_bipartite", kmn ? 1.0 : 0.0}}});
  }

  if (structure.complete)
    items.push_back(detail::compare_spectra(
        "closed_form_complete", es.spectrum,
        closed_form_spectrum(GraphFamily::complete(n)), opts.identity_tol));
  if (structure.regular == 2u && n >= 3)
    items.push_back(detail::compare_spectra(
        "closed_form_cycle", es.spectrum, closed_form_spectrum(GraphFamily::cycle(n)),
        opts.identity_tol));
  if (structure.complete_bipartite)
    items.push_back(detail::compare_spectra(
        "closed_form_complete_bipartite", es.spectrum,
        closed_form_spectrum(GraphFamily::complete_bipartite(structure.complete_bipartite->first,
                                                             structure.complete_bipartite->second)),
        opts.identity_tol));

  if (structure.regular) {
    Spectrum scaled = graph_spectrum(g, WeightScheme::ADJ, opts.solver);
    for (auto& v : scaled.values) v *= static_cast<double>(*structure.regular) * std::numbers::sqrt3;
    items.push_back(
        detail::compare_spectra("regular_spectrum_scaling", es.spectrum, scaled, opts.identity_tol));
    if (n >= 3) {
      const auto s = regular_sum_sq_bound(g, opts);
      items.push_back({"regular_sum_sq_bound",
                       s.pass,
                       std::abs(s.sum_sq - s.bound) <= opts.equality_tol * std::max(1.0, s.bound),
                       {{"sum_sq", s.sum_sq}, {"upper", s.bound}}});
    }
  }
  if (structure.regular || structure.complete_bipartite) {
    const auto r = regular_energy_relation(g, opts);
    items.push_back({"regular_energy_relation",
                     r.pass,
                     false,
                     {{"scale", r.scale}, {"lhs", r.lhs}, {"rhs", r.rhs}}});
  }
  return report;
}

}  // namespace es_spectra
