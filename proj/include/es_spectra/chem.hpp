#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "es_spectra/error.hpp"
#include "es_spectra/graph.hpp"
#include "es_spectra/indices.hpp"
#include "es_spectra/spectral.hpp"

namespace es_spectra::chem {

struct Properties {
  double bp = 0.0;       // boiling point, deg C
  double entropy = 0.0;  // J/(mol K)
  double af = 0.0;       // acentric factor
  double hvap = 0.0;     // kJ/mol
  double dhvap = 0.0;    // kJ/mol
};

inline constexpr std::array<std::string_view, 5> kPropertyLabels{"BP", "Entropy", "AF", "HVAP",
                                                                 "DHVAP"};

inline double property(const Properties& p, std::size_t k) {
  switch (k) {
    case 0: return p.bp;
    case 1: return p.entropy;
    case 2: return p.af;
    case 3: return p.hvap;
    case 4: return p.dhvap;
  }
  throw Error(ErrorCode::InvalidParameter, "property index out of range");
}

struct MoleculeRecord {
  std::string name;
  Graph skeleton;
  Properties properties;
};

/// E_ES, E_FI, E_SZ as printed in the published octane table.
struct PublishedEnergies {
  double e_es;
  double e_fi;
  double e_sz;
};

namespace data {

struct IsomerRow {
  std::string_view name;
  std::vector<VertexPair> edges;
  Properties properties;
  PublishedEnergies published;
};

// Carbon skeletons: the longest chain is C1..Ck = vertices 0..k-1, left to
// right; substituent carbons follow from vertex k on.
inline const std::vector<IsomerRow>& isomers() {
  static const std::vector<IsomerRow> rows = {
      // C1-C2-C3-C4-C5-C6-C7-C8
      {"octane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
       {125.7, 111.7, 0.3979, 73.19, 9.915},
       {30.2172, 66.2439, 31.6212}},
      // heptane, methyl on C2
      {"2-methyl-heptane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}},
       {117.6, 109.8, 0.3792, 70.3, 9.484},
       {30.298, 75.489, 32.0568}},
      // heptane, methyl on C3
      {"3-methyl-heptane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}},
       {118.9, 111.3, 0.371, 71.3, 9.521},
       {31.61, 77.6835, 33.8232}},
      // heptane, methyl on C4
      {"4-methyl-heptane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}},
       {117.7, 109.3, 0.3715, 70.91, 9.483},
       {30.194, 75.0974, 32.9665}},
      // hexane, ethyl (6-7) on C3
      {"3-ethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}},
       {118.5, 109.4, 0.3625, 71.7, 9.476},
       {31.415, 76.9651, 34.5159}},
      // hexane, two methyls on C2
      {"2,2-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {1, 7}},
       {106.8, 103.4, 0.3394, 67.7, 8.915},
       {32.394, 99.8456, 33.9879}},
      // hexane, methyls on C2 and C3
      {"2,3-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {2, 7}},
       {115.6, 108, 0.3483, 70.2, 9.272},
       {31.654, 86.9688, 35.5943}},
      // hexane, methyls on C2 and C4
      {"2,4-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {3, 7}},
       {109.4, 107, 0.3442, 68.5, 9.029},
       {31.452, 86.2309, 34.114}},
      // hexane, methyls on C2 and C5
      {"2,5-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {4, 7}},
       {109.1, 105.7, 0.3568, 68.6, 9.051},
       {31.642, 87.171, 33.3169}},
      // hexane, two methyls on C3
      {"3,3-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {2, 7}},
       {112, 104.7, 0.3226, 68.5, 8.973},
       {32.464, 100.2934, 36.4399}},
      // hexane, methyls on C3 and C4
      {"3,4-dimethyl-hexane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}},
       {117.7, 106.6, 0.3404, 70.2, 9.316},
       {32.98, 89.1456, 37.1639}},
      // pentane, methyl on C2, ethyl (6-7) on C3
      {"2-methyl-3-ethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {6, 7}},
       {115.6, 106.1, 0.3324, 69.7, 9.209},
       {31.502, 86.293, 36.0791}},
      // pentane, methyl and ethyl (6-7) on C3
      {"3-methyl-3-ethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {6, 7}},
       {118.3, 101.5, 0.3069, 69.3, 9.081},
       {33.928, 102.0731, 38.1993}},
      // pentane, two methyls on C2, one on C3
      {"2,2,3-trimethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {2, 7}},
       {109.8, 101.3, 0.3001, 67.3, 8.826},
       {33.804, 111.5061, 38.7971}},
      // pentane, two methyls on C2, one on C4
      {"2,2,4-trimethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {3, 7}},
       {99.24, 104.1, 0.3054, 64.87, 8.402},
       {31.964, 107.718, 33.9633}},
      // pentane, methyl on C2, two on C3
      {"2,3,3-trimethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {2, 7}},
       {114.8, 102.1, 0.2932, 68.1, 8.897},
       {33.976, 111.8089, 39.7411}},
      // pentane, methyls on C2, C3, C4
      {"2,3,4-trimethyl-pentane",
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}},
       {113.5, 102.4, 0.3174, 68.37, 9.014},
       {32.98, 98.451, 37.7739}},
      // butane, two methyls on each of C2 and C3
      {"2,2,3,3-tetramethyl-butane",
       {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}},
       {106.5, 93.06, 0.2553, 66.2, 8.41},
       {34.632, 134.0448, 42.332}},
  };
  return rows;
}

}  // namespace data

/// The 18 octane isomers in published table order.
inline std::vector<MoleculeRecord> octane_corpus() {
  std::vector<MoleculeRecord> out;
  out.reserve(data::isomers().size());
  for (const auto& row : data::isomers())
    out.push_back({std::string(row.name), Graph::from_edge_list(8, row.edges), row.properties});
  return out;
}

inline std::vector<PublishedEnergies> published_energies() {
  std::vector<PublishedEnergies> out;
  for (const auto& row : data::isomers()) out.push_back(row.published);
  return out;
}

/// Published r of E_ES against E_FI and E_SZ.
inline constexpr std::array<double, 2> kPublishedEnergyCorrelation{0.8900, 0.9310};

/// Published r of ES, FI, SZ (rows) against BP, Entropy, AF, HVAP, DHVAP.
inline constexpr std::array<std::array<double, 5>, 3> kPublishedPropertyCorrelation{{
    {-0.374, -0.8740, -0.9003, -0.6129, -0.6966},
    {-0.672, -0.9611, -0.9743, -0.532, -0.9105},
    {-0.248, -0.8557, -0.8967, -0.5053, -0.6139},
}};

// ---------------------------------------------------------------------------

/// Pearson product-moment correlation, clamped to [-1, 1].
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error(ErrorCode::LengthMismatch, "pearson: " + std::to_string(xs.size()) + " vs " +
                                               std::to_string(ys.size()) + " values");
  if (xs.size() < 3) throw Error(ErrorCode::LengthMismatch, "pearson: need at least 3 values");
  auto constant = [](std::span<const double> v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  if (constant(xs) || constant(ys))
    throw Error(ErrorCode::DegenerateVariance, "pearson: constant input");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::DegenerateVariance, "pearson: constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct EnergyRow {
  std::string name;
  double e_es = 0.0;
  double e_fi = 0.0;
  double e_sz = 0.0;
};

inline std::vector<EnergyRow> energy_table(const SpectralOptions& opts = {}) {
  std::vector<EnergyRow> rows;
  for (const auto& rec : octane_corpus()) {
    rows.push_back({rec.name,
                    graph_energy(rec.skeleton, WeightScheme::ES, opts).energy,
                    graph_energy(rec.skeleton, WeightScheme::FI, opts).energy,
                    graph_energy(rec.skeleton, WeightScheme::SZ, opts).energy});
  }
  return rows;
}

inline std::vector<EnergyRow> published_energy_table() {
  std::vector<EnergyRow> rows;
  for (const auto& row : data::isomers())
    rows.push_back({std::string(row.name), row.published.e_es, row.published.e_fi,
                    row.published.e_sz});
  return rows;
}

struct TableCell {
  std::string name;
  std::string column;  // E_ES, E_FI or E_SZ
  double computed = 0.0;
  double published = 0.0;
  double relative_deviation = 0.0;
};

struct TableComparison {
  std::size_t rows_matching = 0;
  std::size_t rows_total = 0;
  std::vector<TableCell> mismatches;
};

/// A row matches when all three energies are within `rel_tol` of the
/// published values; every cell outside tolerance is listed.
inline TableComparison compare_with_published(const std::vector<EnergyRow>& computed,
                                              double rel_tol = 0.01) {
  const auto published = published_energy_table();
  if (computed.size() != published.size())
    throw Error(ErrorCode::LengthMismatch, "energy table must have one row per isomer");
  TableComparison cmp;
  cmp.rows_total = computed.size();
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const std::array<std::pair<const char*, std::pair<double, double>>, 3> cells{{
        {"E_ES", {computed[i].e_es, published[i].e_es}},
        {"E_FI", {computed[i].e_fi, published[i].e_fi}},
        {"E_SZ", {computed[i].e_sz, published[i].e_sz}},
    }};
    bool row_ok = true;
    for (const auto& [column, values] : cells) {
      const double dev = (values.first - values.second) / values.second;
      if (std::abs(dev) > rel_tol) {
        row_ok = false;
        cmp.mismatches.push_back({computed[i].name, column, values.first, values.second, dev});
      }
    }
    if (row_ok) ++cmp.rows_matching;
  }
  return cmp;
}

// ---------------------------------------------------------------------------
// Correlations

enum class CorrelationSource { Computed, PaperTable };

inline constexpr std::string_view to_string(CorrelationSource s) {
  return s == CorrelationSource::Computed ? "computed" : "paper_table";
}

struct CorrelationPair {
  std::string group;  // energy_vs_energy, energy_vs_property, index_vs_property
  std::string x_label;
  std::string y_label;
  double r = 0.0;
};

struct CorrelationReport {
  CorrelationSource source = CorrelationSource::Computed;
  std::vector<CorrelationPair> pairs;

  const CorrelationPair* find(std::string_view x, std::string_view y) const {
    for (const auto& p : pairs)
      if (p.x_label == x && p.y_label == y) return &p;
    return nullptr;
  }
};

/// Energy-vs-energy pairs (E_ES against E_FI, E_SZ), then each of E_ES, E_FI,
/// E_SZ against the five properties, then each of the ES, FI, SZ indices
/// against the five properties. `PaperTable` takes the energies from the
/// published table; indices are always computed from the skeletons.
inline CorrelationReport correlation_report(CorrelationSource source,
                                            const SpectralOptions& opts = {}) {
  const auto corpus = octane_corpus();
  const auto energies =
      source == CorrelationSource::PaperTable ? published_energy_table() : energy_table(opts);
  const std::size_t n = corpus.size();

  std::array<std::vector<double>, 3> energy_cols, index_cols;
  std::array<std::vector<double>, 5> property_cols;
  constexpr std::array<WeightScheme, 3> schemes{WeightScheme::ES, WeightScheme::FI,
                                                WeightScheme::SZ};
  for (std::size_t i = 0; i < n; ++i) {
    energy_cols[0].push_back(energies[i].e_es);
    energy_cols[1].push_back(energies[i].e_fi);
    energy_cols[2].push_back(energies[i].e_sz);
    for (std::size_t s = 0; s < 3; ++s) index_cols[s].push_back(index(corpus[i].skeleton, schemes[s]));
    for (std::size_t k = 0; k < 5; ++k) property_cols[k].push_back(property(corpus[i].properties, k));
  }

  constexpr std::array<std::string_view, 3> energy_labels{"E_ES", "E_FI", "E_SZ"};
  constexpr std::array<std::string_view, 3> index_labels{"ES", "FI", "SZ"};

  CorrelationReport report;
  report.source = source;
  for (std::size_t s = 1; s < 3; ++s)
    report.pairs.push_back({"energy_vs_energy", "E_ES", std::string(energy_labels[s]),
                            pearson(energy_cols[0], energy_cols[s])});
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t k = 0; k < 5; ++k)
      report.pairs.push_back({"energy_vs_property", std::string(energy_labels[s]),
                              std::string(kPropertyLabels[k]),
                              pearson(energy_cols[s], property_cols[k])});
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t k = 0; k < 5; ++k)
      report.pairs.push_back({"index_vs_property", std::string(index_labels[s]),
                              std::string(kPropertyLabels[k]),
                              pearson(index_cols[s], property_cols[k])});
  return report;
}

struct PropertyRowMatch {
  std::string interpretation;  // "energy" or "index"
  std::array<double, 5> r{};
  double max_abs_deviation = 0.0;
  bool matches = false;
};

/// Compares the ES row of the published property-correlation table with the
/// report under both readings: correlations of E_ES, and of the ES index.
inline std::vector<PropertyRowMatch> match_es_property_row(const CorrelationReport& report,
                                                           double tol = 0.03) {
  std::vector<PropertyRowMatch> out;
  for (const auto& [interpretation, label] :
       std::array<std::pair<std::string_view, std::string_view>, 2>{{{"energy", "E_ES"},
                                                                     {"index", "ES"}}}) {
    PropertyRowMatch m;
    m.interpretation = std::string(interpretation);
    for (std::size_t k = 0; k < 5; ++k) {
      const auto* pair = report.find(label, kPropertyLabels[k]);
      if (!pair) throw Error(ErrorCode::NotApplicable, "report lacks " + std::string(label));
      m.r[k] = pair->r;
      m.max_abs_deviation =
          std::max(m.max_abs_deviation, std::abs(pair->r - kPublishedPropertyCorrelation[0][k]));
    }
    m.matches = m.max_abs_deviation <= tol;
    out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// `name,e_es,e_fi,e_sz,bp,entropy,af,hvap,dhvap` with 4-decimal energies.
inline std::string corpus_csv(const std::vector<EnergyRow>& energies) {
  const auto corpus = octane_corpus();
  if (energies.size() != corpus.size())
    throw Error(ErrorCode::LengthMismatch, "energy table must have one row per isomer");
  std::string out = "name,e_es,e_fi,e_sz,bp,entropy,af,hvap,dhvap\n";
  char buf[256];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i].properties;
    // names such as 2,2-dimethyl-hexane contain commas
    const std::string name = corpus[i].name.find(',') == std::string::npos
                                 ? corpus[i].name
                                 : '"' + corpus[i].name + '"';
    std::snprintf(buf, sizeof buf, "%s,%.4f,%.4f,%.4f,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  name.c_str(), energies[i].e_es, energies[i].e_fi, energies[i].e_sz,
                  p.bp, p.entropy, p.af, p.hvap, p.dhvap);
    out += buf;
  }
  return out;
}

}  // namespace es_spectra::chem
