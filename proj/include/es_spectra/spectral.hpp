#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "es_spectra/error.hpp"
#include "es_spectra/graph.hpp"
#include "es_spectra/indices.hpp"
#include "es_spectra/jacobi.hpp"

namespace es_spectra {

/// Symmetric, zero diagonal, positive exactly on the edges of the source graph.
using WeightedMatrix = SymmetricMatrix;

struct SpectralOptions {
  JacobiOptions solver{};
  double cluster_tol = 1e-6;   // relative to max(1, |largest eigenvalue|)
  double identity_tol = 1e-7;  // absolute, scaled by (1 + |expected|)
  double equality_tol = 1e-8;  // relative; marks a bound as attained
};

/// |observed - expected| <= tol * (1 + |expected|)
inline bool within_tolerance(double observed, double expected, double tol) {
  return std::abs(observed - expected) <= tol * (1.0 + std::abs(expected));
}

inline WeightedMatrix build_matrix(const Graph& g, WeightScheme scheme) {
  WeightedMatrix m(g.order());
  for (const auto& e : g.edges()) m.set(e.u, e.v, edge_weight(scheme, g.degree(e.u), g.degree(e.v)));
  return m;
}

inline Spectrum graph_spectrum(const Graph& g, WeightScheme scheme, const JacobiOptions& opts = {}) {
  return eigen_spectrum(build_matrix(g, scheme), opts);
}

inline double energy_of(const Spectrum& s) {
  double e = 0.0;
  for (double v : s.values) e += std::abs(v);
  return e;
}

namespace detail {

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw Error(ErrorCode::NotConnected, std::string(what) + " requires a connected graph");
}

inline void require_order_at_least(const Graph& g, std::size_t n, const char* what) {
  if (g.order() < n)
    throw Error(ErrorCode::NotApplicable,
                std::string(what) + " requires at least " + std::to_string(n) + " vertices");
}

/// Sum of squared edge weights; half the trace of M^2. Equals FI + SZ for ES.
inline double squared_weight_sum(const Graph& g, WeightScheme scheme) {
  if (scheme == WeightScheme::ES) return index(g, WeightScheme::FI) + index(g, WeightScheme::SZ);
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const double w = edge_weight(scheme, g.degree(e.u), g.degree(e.v));
    total += w * w;
  }
  return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Energy and its bounds

struct BoundCheck {
  std::string name;
  std::optional<double> lower;
  double observed = 0.0;
  std::optional<double> upper;
  bool satisfied = false;
  bool attained = false;  // observed meets the bound within equality_tol
};

struct EnergyReport {
  WeightScheme scheme = WeightScheme::ES;
  double energy = 0.0;
  double fi = 0.0;
  double sz = 0.0;
  double index_value = 0.0;
  Spectrum spectrum;
  std::vector<BoundCheck> bound_checks;
};

/// Energy bounds 2 sqrt(S) <= E <= sqrt(2 n S) and spectral-radius bounds
/// sqrt(2 S / n) < nu_1 <= sqrt(2 (n-1) S / n), where S = FI + SZ for the ES
/// matrix (in general S is the sum of squared edge weights).
inline std::vector<BoundCheck> bound_checks(const Graph& g, WeightScheme scheme, double energy,
                                            double radius, const SpectralOptions& opts = {}) {
  const double n = static_cast<double>(g.order());
  const double s = detail::squared_weight_sum(g, scheme);
  const double tol = opts.identity_tol;
  auto attained = [&](double observed, double bound) {
    return std::abs(observed - bound) <= opts.equality_tol * std::max(1.0, std::abs(bound));
  };

  std::vector<BoundCheck> checks;
  {
    const double lo = 2.0 * std::sqrt(s);
    checks.push_back({"energy_lower", lo, energy, std::nullopt,
                      energy >= lo - tol * (1.0 + lo), attained(energy, lo)});
  }
  {
    const double hi = std::sqrt(2.0 * n * s);
    checks.push_back({"energy_upper", std::nullopt, energy, hi,
                      energy <= hi + tol * (1.0 + hi), attained(energy, hi)});
  }
  {
    const double lo = std::sqrt(2.0 * s / n);
    checks.push_back({"radius_lower", lo, radius, std::nullopt, radius > lo, attained(radius, lo)});
  }
  {
    const double hi = std::sqrt(2.0 * (n - 1.0) * s / n);
    checks.push_back({"radius_upper", std::nullopt, radius, hi,
                      radius <= hi + tol * (1.0 + hi), attained(radius, hi)});
  }
  return checks;
}

/// Spectrum, energy and indices of `g` under `scheme`. Bound checks are only
/// populated for connected graphs on at least three vertices.
inline EnergyReport graph_energy(const Graph& g, WeightScheme scheme,
                                 const SpectralOptions& opts = {}) {
  EnergyReport r;
  r.scheme = scheme;
  r.spectrum = graph_spectrum(g, scheme, opts.solver);
  r.energy = energy_of(r.spectrum);
  r.fi = index(g, WeightScheme::FI);
  r.sz = index(g, WeightScheme::SZ);
  r.index_value = index(g, scheme);
  if (g.order() >= 3 && is_connected(g))
    r.bound_checks = bound_checks(g, scheme, r.energy, r.spectrum.largest(), opts);
  return r;
}

// ---------------------------------------------------------------------------
// Closed forms

/// Exact ES spectra of the regular and complete-bipartite families:
///   K_n       (n-1)^2 sqrt3 once, -(n-1) sqrt3 with multiplicity n-1
///   C_n       4 sqrt3 cos(2 pi i / n), i = 0..n-1
///   K_{m,n}   +-sqrt(mn) sqrt(m^2+n^2+mn), 0 with multiplicity m+n-2
///   S_n       +-sqrt(n-1) sqrt(n^2-n+1), 0 with multiplicity n-2
inline Spectrum closed_form_spectrum(const GraphFamily& f, WeightScheme scheme = WeightScheme::ES) {
  using K = GraphFamily::Kind;
  validate(f);
  if (scheme != WeightScheme::ES)
    throw Error(ErrorCode::UnsupportedScheme,
                "closed forms exist only for the es scheme, not " + std::string(to_string(scheme)));
  const double sqrt3 = std::numbers::sqrt3;
  Spectrum s;
  auto& v = s.values;
  const auto n = static_cast<double>(f.first);
  auto plus_zero_minus = [&](double top, std::size_t order) {
    v.push_back(top);
    v.insert(v.end(), order - 2, 0.0);
    v.push_back(-top);
  };
  switch (f.kind) {
    case K::Complete:
      v.push_back((n - 1.0) * (n - 1.0) * sqrt3);
      v.insert(v.end(), f.first - 1, -(n - 1.0) * sqrt3);
      break;
    case K::Cycle:
      for (std::size_t i = 0; i < f.first; ++i)
        v.push_back(4.0 * sqrt3 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n));
      break;
    case K::CompleteBipartite: {
      const auto a = static_cast<double>(f.first);
      const auto b = static_cast<double>(f.second);
      plus_zero_minus(std::sqrt(a * b) * std::sqrt(a * a + b * b + a * b), f.first + f.second);
      break;
    }
    case K::Star:
      if (f.first == 1) {
        v.push_back(0.0);
      } else {
        plus_zero_minus(std::sqrt(n - 1.0) * std::sqrt(n * n - n + 1.0), f.first);
      }
      break;
    case K::Path:
      throw Error(ErrorCode::UnsupportedFamily, "no closed-form ES spectrum for paths");
  }
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return s;
}

// ---------------------------------------------------------------------------
// Identities and characterizations

struct TraceIdentityReport {
  double sum = 0.0;
  double sum_sq = 0.0;
  double pair_sum = 0.0;
  double expected_sum_sq = 0.0;  // 2 (FI + SZ)
  bool pass = false;
};

/// sum nu_i = 0, sum nu_i^2 = 2 (FI + SZ), sum_{i<j} nu_i nu_j = -(FI + SZ)
/// on the numeric ES spectrum.
inline TraceIdentityReport verify_trace_identities(const Graph& g, const SpectralOptions& opts = {}) {
  detail::require_connected(g, "trace identity check");
  detail::require_order_at_least(g, 3, "trace identity check");
  const auto spectrum = graph_spectrum(g, WeightScheme::ES, opts.solver);
  const auto& nu = spectrum.values;
  const double fi_sz = index(g, WeightScheme::FI) + index(g, WeightScheme::SZ);

  TraceIdentityReport r;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    r.sum += nu[i];
    r.sum_sq += nu[i] * nu[i];
    for (std::size_t j = i + 1; j < nu.size(); ++j) r.pair_sum += nu[i] * nu[j];
  }
  r.expected_sum_sq = 2.0 * fi_sz;
  const double tol = opts.identity_tol;
  // the eigenvalue sum is compared on the scale of the spectrum, not of 0
  const double sum_scale = std::sqrt(r.expected_sum_sq);
  r.pass = std::abs(r.sum) <= tol * (1.0 + sum_scale) &&
           within_tolerance(r.sum_sq, r.expected_sum_sq, tol) &&
           within_tolerance(r.pair_sum, -fi_sz, tol);
  return r;
}

struct DistinctEigenvalues {
  std::size_t count = 0;
  std::vector<double> representatives;
};

/// Greedy clustering over the descending spectrum: a new cluster starts when
/// the gap to the current representative exceeds tol * max(1, |nu_1|).
inline DistinctEigenvalues distinct_eigenvalues(const Spectrum& s, double tol_cluster = 1e-6) {
  DistinctEigenvalues out;
  if (s.values.empty()) return out;
  const double gap = tol_cluster * std::max(1.0, std::abs(s.values.front()));
  for (double v : s.values) {
    if (out.representatives.empty() || out.representatives.back() - v > gap)
      out.representatives.push_back(v);
  }
  out.count = out.representatives.size();
  return out;
}

struct DiameterBoundReport {
  std::size_t diam = 0;
  std::size_t distinct = 0;
  bool pass = false;
};

/// diam(G) <= (number of distinct ES eigenvalues) - 1.
inline DiameterBoundReport diameter_bound_check(const Graph& g, const SpectralOptions& opts = {}) {
  detail::require_connected(g, "diameter bound");
  DiameterBoundReport r;
  r.diam = diameter(g);
  r.distinct =
      distinct_eigenvalues(graph_spectrum(g, WeightScheme::ES, opts.solver), opts.cluster_tol).count;
  r.pass = r.diam + 1 <= r.distinct;
  return r;
}

struct PathEnergyBound {
  double bound = 0.0;
  double adjacency_energy = 0.0;
};

/// E_ES(P_n) <= sqrt12 * E(P_n) + 2 (sqrt7 - sqrt12), with E(P_n) taken from
/// the adjacency spectrum 2 cos(k pi / (n+1)), k = 1..n.
inline PathEnergyBound path_energy_bound(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::InvalidParameter, "path energy bound requires n >= 4");
  PathEnergyBound r;
  const double step = std::numbers::pi / static_cast<double>(n + 1);
  for (std::size_t k = 1; k <= n; ++k)
    r.adjacency_energy += std::abs(2.0 * std::cos(static_cast<double>(k) * step));
  const double sqrt12 = std::sqrt(12.0);
  r.bound = sqrt12 * r.adjacency_energy + 2.0 * (std::sqrt(7.0) - sqrt12);
  return r;
}

struct RegularEnergyReport {
  std::optional<std::size_t> degree;  // set for regular graphs
  std::optional<std::pair<std::size_t, std::size_t>> parts;  // set for complete bipartite
  double scale = 0.0;  // r sqrt3, or sqrt(m^2+n^2+mn)
  double lhs = 0.0;    // E_ES
  double rhs = 0.0;    // scale * E_ADJ
  bool pass = false;
};

/// E_ES = r sqrt3 E_ADJ for r-regular graphs and
/// E_ES = sqrt(m^2+n^2+mn) E_ADJ for K_{m,n}.
inline RegularEnergyReport regular_energy_relation(const Graph& g, const SpectralOptions& opts = {}) {
  detail::require_connected(g, "regular energy relation");
  const auto structure = classify(g);
  RegularEnergyReport r;
  if (structure.regular) {
    r.degree = structure.regular;
    r.scale = static_cast<double>(*structure.regular) * std::numbers::sqrt3;
  } else if (structure.complete_bipartite) {
    r.parts = structure.complete_bipartite;
    const auto a = static_cast<double>(r.parts->first);
    const auto b = static_cast<double>(r.parts->second);
    r.scale = std::sqrt(a * a + b * b + a * b);
  } else {
    throw Error(ErrorCode::NotApplicable, "graph is neither regular nor complete bipartite");
  }
  if (structure.complete_bipartite) r.parts = structure.complete_bipartite;
  r.lhs = energy_of(graph_spectrum(g, WeightScheme::ES, opts.solver));
  r.rhs = r.scale * energy_of(graph_spectrum(g, WeightScheme::ADJ, opts.solver));
  r.pass = within_tolerance(r.lhs, r.rhs, opts.identity_tol);
  return r;
}

struct RegularSumSqReport {
  double sum_sq = 0.0;
  double bound = 0.0;  // (n-1)(FI + SZ)
  bool pass = false;
};

/// sum nu_i^2 <= (n-1)(FI + SZ) for connected regular graphs, n >= 3.
inline RegularSumSqReport regular_sum_sq_bound(const Graph& g, const SpectralOptions& opts = {}) {
  detail::require_connected(g, "regular sum-of-squares bound");
  detail::require_order_at_least(g, 3, "regular sum-of-squares bound");
  if (!classify(g).regular) throw Error(ErrorCode::NotApplicable, "graph is not regular");
  RegularSumSqReport r;
  for (double v : graph_spectrum(g, WeightScheme::ES, opts.solver).values) r.sum_sq += v * v;
  const double fi_sz = index(g, WeightScheme::FI) + index(g, WeightScheme::SZ);
  r.bound = static_cast<double>(g.order() - 1) * fi_sz;
  r.pass = r.sum_sq <= r.bound + opts.identity_tol * (1.0 + r.bound);
  return r;
}

}  // namespace es_spectra
