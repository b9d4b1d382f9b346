#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "es_spectra/graph.hpp"
#include "es_spectra/spectral.hpp"
#include "oracles.hpp"

using namespace es_spectra;

namespace {

const double kSqrt3 = std::numbers::sqrt3;

void expect_spectrum(const Spectrum& s, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_NEAR(s.values[i], expected[i], tol) << "index " << i;
}

const BoundCheck& find_bound(const EnergyReport& r, const std::string& name) {
  for (const auto& b : r.bound_checks)
    if (b.name == name) return b;
  throw std::runtime_error("missing bound " + name);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::Parse;
}

}  // namespace

TEST(BuildMatrix, K2AndP3) {
  auto k2 = build_matrix(generate(GraphFamily::complete(2)), WeightScheme::ES);
  EXPECT_EQ(k2(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(k2(0, 1), kSqrt3);
  EXPECT_DOUBLE_EQ(k2(1, 0), kSqrt3);

  auto p3 = build_matrix(generate(GraphFamily::path(3)), WeightScheme::ES);
  EXPECT_DOUBLE_EQ(p3(0, 1), std::sqrt(7.0));
  EXPECT_DOUBLE_EQ(p3(1, 2), std::sqrt(7.0));
  EXPECT_EQ(p3(0, 2), 0.0);
}

TEST(BuildMatrix, StructureMatchesGraph) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(1 + i % 25, 0.3, rng);
    for (auto scheme : kAllSchemes) {
      auto m = build_matrix(g, scheme);
      for (Vertex a = 0; a < g.order(); ++a) {
        EXPECT_EQ(m(a, a), 0.0);
        for (Vertex b = 0; b < g.order(); ++b) {
          EXPECT_EQ(m(a, b), m(b, a));
          EXPECT_EQ(m(a, b) > 0.0, g.has_edge(a, b));
          if (scheme == WeightScheme::ADJ) EXPECT_EQ(m(a, b), g.has_edge(a, b) ? 1.0 : 0.0);
        }
      }
    }
  }
}

TEST(GraphEnergy, K4MeetsRadiusUpperBound) {
  auto r = graph_energy(generate(GraphFamily::complete(4)), WeightScheme::ES);
  EXPECT_NEAR(r.energy, 18.0 * kSqrt3, 1e-10);
  EXPECT_NEAR(r.energy, 31.17691, 1e-5);
  EXPECT_DOUBLE_EQ(r.fi, 108.0);
  EXPECT_DOUBLE_EQ(r.sz, 54.0);
  const auto& upper = find_bound(r, "radius_upper");
  EXPECT_NEAR(*upper.upper, 9.0 * kSqrt3, 1e-12);
  EXPECT_TRUE(upper.satisfied);
  EXPECT_TRUE(upper.attained);
  EXPECT_FALSE(find_bound(r, "radius_lower").attained);
  EXPECT_EQ(r.bound_checks.size(), 4u);
}

TEST(GraphEnergy, OctaneSkeleton) {
  auto r = graph_energy(generate(GraphFamily::path(8)), WeightScheme::ES);
  EXPECT_NEAR(r.energy, 30.2172, 0.001);
  for (const auto& b : r.bound_checks) EXPECT_TRUE(b.satisfied) << b.name;
  EXPECT_NEAR(r.index_value, 2.0 * std::sqrt(7.0) + 5.0 * std::sqrt(12.0), 1e-12);
}

TEST(GraphEnergy, SmallOrDisconnectedHasNoBounds) {
  auto k2 = graph_energy(generate(GraphFamily::complete(2)), WeightScheme::ES);
  EXPECT_NEAR(k2.energy, 2.0 * kSqrt3, 1e-14);
  EXPECT_TRUE(k2.bound_checks.empty());
  auto split = graph_energy(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), WeightScheme::ES);
  EXPECT_NEAR(split.energy, 4.0 * kSqrt3, 1e-13);
  EXPECT_TRUE(split.bound_checks.empty());
}

TEST(GraphEnergy, EnergyAtLeastSpectralRadius) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(1 + i % 20, 0.3, rng);
    for (auto scheme : kAllSchemes) {
      auto r = graph_energy(g, scheme);
      EXPECT_GE(r.energy, 0.0);
      EXPECT_GE(r.energy + 1e-12, std::abs(r.spectrum.largest()));
    }
  }
}

TEST(ClosedForm, Examples) {
  expect_spectrum(closed_form_spectrum(GraphFamily::star(5)),
                  {2.0 * std::sqrt(21.0), 0, 0, 0, -2.0 * std::sqrt(21.0)}, 1e-12);
  EXPECT_NEAR(closed_form_spectrum(GraphFamily::star(5)).values[0], 9.16515, 1e-5);
  expect_spectrum(closed_form_spectrum(GraphFamily::complete_bipartite(2, 3)),
                  {std::sqrt(114.0), 0, 0, 0, -std::sqrt(114.0)}, 1e-12);
  expect_spectrum(closed_form_spectrum(GraphFamily::cycle(4)), {4 * kSqrt3, 0, 0, -4 * kSqrt3},
                  1e-12);
  expect_spectrum(closed_form_spectrum(GraphFamily::complete(4)),
                  {9 * kSqrt3, -3 * kSqrt3, -3 * kSqrt3, -3 * kSqrt3}, 1e-12);
}

TEST(ClosedForm, Unsupported) {
  EXPECT_EQ(code_of([] { closed_form_spectrum(GraphFamily::path(5)); }),
            ErrorCode::UnsupportedFamily);
  EXPECT_EQ(code_of([] { closed_form_spectrum(GraphFamily::cycle(5), WeightScheme::FI); }),
            ErrorCode::UnsupportedScheme);
  EXPECT_EQ(code_of([] { closed_form_spectrum(GraphFamily::cycle(2)); }),
            ErrorCode::InvalidParameter);
}

TEST(ClosedForm, MatchesNumericForSmallFamilies) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<GraphFamily> families{GraphFamily::complete(n), GraphFamily::star(n)};
    if (n >= 3) families.push_back(GraphFamily::cycle(n));
    for (std::size_t m = 1; m <= 6; ++m) families.push_back(GraphFamily::complete_bipartite(m, n));
    for (const auto& f : families) {
      auto numeric = graph_spectrum(generate(f), WeightScheme::ES);
      expect_spectrum(numeric, closed_form_spectrum(f).values, 1e-8);
    }
  }
}

TEST(TraceIdentities, Path3) {
  auto r = verify_trace_identities(generate(GraphFamily::path(3)));
  EXPECT_NEAR(r.sum_sq, 28.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.expected_sum_sq, 28.0);
  EXPECT_NEAR(r.pair_sum, -14.0, 1e-12);
  EXPECT_NEAR(r.sum, 0.0, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(TraceIdentities, Triangle) {
  auto r = verify_trace_identities(generate(GraphFamily::complete(3)));
  EXPECT_DOUBLE_EQ(r.expected_sum_sq, 72.0);
  EXPECT_NEAR(r.sum_sq, 72.0, 1e-11);
  EXPECT_NEAR(r.pair_sum, -36.0, 1e-11);
  EXPECT_TRUE(r.pass);
}

TEST(TraceIdentities, Preconditions) {
  EXPECT_EQ(code_of([] { verify_trace_identities(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); }),
            ErrorCode::NotConnected);
  EXPECT_EQ(code_of([] { verify_trace_identities(generate(GraphFamily::complete(2))); }),
            ErrorCode::NotApplicable);
}

TEST(TraceIdentities, RandomConnectedGraphs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto r = verify_trace_identities(oracle::random_connected_graph(3 + i % 30, rng));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.sum, 0.0, 1e-8);
  }
}

TEST(DistinctEigenvalues, Examples) {
  EXPECT_EQ(distinct_eigenvalues(closed_form_spectrum(GraphFamily::complete(7))).count, 2u);
  EXPECT_EQ(distinct_eigenvalues(closed_form_spectrum(GraphFamily::complete_bipartite(3, 4))).count,
            3u);
  auto p4 = distinct_eigenvalues(graph_spectrum(generate(GraphFamily::path(4)), WeightScheme::ES));
  EXPECT_EQ(p4.count, 4u);
  EXPECT_EQ(p4.representatives.size(), 4u);
  EXPECT_EQ(distinct_eigenvalues(Spectrum{}).count, 0u);
}

TEST(DistinctEigenvalues, ClusterToleranceIsRelative) {
  Spectrum s;
  s.values = {1000.0, 1.0 + 5e-4, 1.0, -1.0};
  // gap threshold is 1e-6 * 1000 = 1e-3, so the two values near 1 merge
  EXPECT_EQ(distinct_eigenvalues(s).count, 3u);
  EXPECT_EQ(distinct_eigenvalues(s, 1e-9).count, 4u);
  // numeric K_n spectra collapse to two values despite rounding noise
  for (std::size_t n = 3; n <= 30; ++n)
    EXPECT_EQ(
        distinct_eigenvalues(graph_spectrum(generate(GraphFamily::complete(n)), WeightScheme::ES))
            .count,
        2u);
}

TEST(DiameterBound, Examples) {
  auto k5 = diameter_bound_check(generate(GraphFamily::complete(5)));
  EXPECT_EQ(k5.diam, 1u);
  EXPECT_EQ(k5.distinct, 2u);
  EXPECT_TRUE(k5.pass);
  auto p4 = diameter_bound_check(generate(GraphFamily::path(4)));
  EXPECT_EQ(p4.diam, 3u);
  EXPECT_EQ(p4.distinct, 4u);
  EXPECT_TRUE(p4.pass);
  auto c6 = diameter_bound_check(generate(GraphFamily::cycle(6)));
  EXPECT_EQ(c6.diam, 3u);
  EXPECT_EQ(c6.distinct, 4u);  // 4 sqrt3 cos(2 pi i / 6) takes 4 values
  EXPECT_TRUE(c6.pass);
  EXPECT_EQ(code_of([] { diameter_bound_check(Graph::from_edge_list(3, {{0, 1}})); }),
            ErrorCode::NotConnected);
}

TEST(PathEnergyBound, SmallPaths) {
  auto b4 = path_energy_bound(4);
  EXPECT_NEAR(b4.adjacency_energy, 2.0 * std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(b4.bound, 13.8553, 1e-4);
  const double e4 = graph_energy(generate(GraphFamily::path(4)), WeightScheme::ES).energy;
  EXPECT_NEAR(e4, 2.0 * (std::sqrt(13.0 + std::sqrt(120.0)) + std::sqrt(13.0 - std::sqrt(120.0))),
              1e-11);
  EXPECT_LE(e4, b4.bound);

  // adjacency energy of P_8 from the sign-count oracle, independent of the cosine sum
  auto p8 = generate(GraphFamily::path(8));
  double oracle_energy = 0.0;
  for (double v : oracle::tree_eigenvalues(p8, build_matrix(p8, WeightScheme::ADJ)))
    oracle_energy += std::abs(v);
  auto b8 = path_energy_bound(8);
  EXPECT_NEAR(b8.adjacency_energy, oracle_energy, 1e-9);
  EXPECT_NEAR(b8.adjacency_energy, 9.51754, 1e-5);
  EXPECT_NEAR(b8.bound, 31.33, 0.01);
  EXPECT_LE(graph_energy(p8, WeightScheme::ES).energy, b8.bound);
}

TEST(PathEnergyBound, HoldsUpToOneHundred) {
  for (std::size_t n = 4; n <= 100; n += 8) {
    auto b = path_energy_bound(n);
    EXPECT_LT(graph_energy(generate(GraphFamily::path(n)), WeightScheme::ES).energy, b.bound) << n;
  }
  EXPECT_EQ(code_of([] { path_energy_bound(3); }), ErrorCode::InvalidParameter);
}

TEST(RegularEnergyRelation, Examples) {
  auto c5 = regular_energy_relation(generate(GraphFamily::cycle(5)));
  EXPECT_EQ(c5.degree, 2u);
  EXPECT_NEAR(c5.scale, 2.0 * kSqrt3, 1e-15);
  EXPECT_TRUE(c5.pass);

  auto k6 = regular_energy_relation(generate(GraphFamily::complete(6)));
  EXPECT_NEAR(k6.lhs, 50.0 * kSqrt3, 1e-9);
  EXPECT_TRUE(k6.pass);

  auto k23 = regular_energy_relation(generate(GraphFamily::complete_bipartite(2, 3)));
  EXPECT_FALSE(k23.degree);
  EXPECT_NEAR(k23.scale, std::sqrt(19.0), 1e-15);
  EXPECT_NEAR(k23.lhs, 2.0 * std::sqrt(114.0), 1e-11);
  EXPECT_NEAR(k23.rhs, std::sqrt(19.0) * 2.0 * std::sqrt(6.0), 1e-11);
  EXPECT_TRUE(k23.pass);

  EXPECT_EQ(code_of([] { regular_energy_relation(generate(GraphFamily::path(5))); }),
            ErrorCode::NotApplicable);
  EXPECT_EQ(code_of([] { regular_energy_relation(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); }),
            ErrorCode::NotConnected);
}

TEST(RegularSumSqBound, Examples) {
  auto k3 = regular_sum_sq_bound(generate(GraphFamily::complete(3)));
  EXPECT_NEAR(k3.sum_sq, 72.0, 1e-11);
  EXPECT_DOUBLE_EQ(k3.bound, 72.0);
  EXPECT_TRUE(k3.pass);

  auto c6 = regular_sum_sq_bound(generate(GraphFamily::cycle(6)));
  EXPECT_NEAR(c6.sum_sq, 144.0, 1e-10);
  EXPECT_DOUBLE_EQ(c6.bound, 360.0);
  EXPECT_TRUE(c6.pass);

  for (std::size_t n = 3; n <= 40; ++n)
    EXPECT_TRUE(regular_sum_sq_bound(generate(GraphFamily::cycle(n))).pass);

  EXPECT_EQ(code_of([] { regular_sum_sq_bound(generate(GraphFamily::star(5))); }),
            ErrorCode::NotApplicable);
}

TEST(Properties, RegularSpectrumIsScaledAdjacency) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_connected_regular_graph(rng);
    const double r = static_cast<double>(g.degree(0));
    auto es = graph_spectrum(g, WeightScheme::ES);
    auto adj = graph_spectrum(g, WeightScheme::ADJ);
    for (std::size_t k = 0; k < g.order(); ++k)
      EXPECT_NEAR(es.values[k], r * kSqrt3 * adj.values[k], 1e-8);
  }
}

TEST(Properties, BoundSandwichOnRandomGraphs) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_connected_graph(3 + i % 38, rng);
    auto r = graph_energy(g, WeightScheme::ES);
    ASSERT_EQ(r.bound_checks.size(), 4u);
    for (const auto& b : r.bound_checks) EXPECT_TRUE(b.satisfied) << b.name;
    EXPECT_EQ(find_bound(r, "radius_upper").attained, classify(g).complete);
  }
}

TEST(Properties, RadiusUpperTightExactlyOnCompleteGraphs) {
  std::mt19937_64 rng(26);
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_TRUE(
        find_bound(graph_energy(generate(GraphFamily::complete(n)), WeightScheme::ES), "radius_upper")
            .attained);
    // K_n minus one edge is the closest non-complete graph
    auto pairs = generate(GraphFamily::complete(n)).edge_pairs();
    pairs.erase(pairs.begin());
    EXPECT_FALSE(find_bound(graph_energy(Graph::from_edge_list(n, pairs), WeightScheme::ES),
                            "radius_upper")
                     .attained);
  }
}

TEST(Properties, SpectrumInvariantUnderRelabeling) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_connected_graph(3 + i % 25, rng);
    auto h = relabel(g, oracle::random_permutation(g.order(), rng));
    auto a = graph_energy(g, WeightScheme::ES);
    auto b = graph_energy(h, WeightScheme::ES);
    EXPECT_NEAR(a.energy, b.energy, 1e-9);
    for (std::size_t k = 0; k < g.order(); ++k)
      EXPECT_NEAR(a.spectrum.values[k], b.spectrum.values[k], 1e-9);
  }
}

TEST(BoundChecks, GeneralSchemesUseSquaredWeightSum) {
  // for FI weights the trace of M^2 is twice the sum of squared weights
  auto g = generate(GraphFamily::path(5));
  auto r = graph_energy(g, WeightScheme::FI);
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double w = edge_weight(WeightScheme::FI, g.degree(e.u), g.degree(e.v));
    s += w * w;
  }
  EXPECT_NEAR(*find_bound(r, "energy_lower").lower, 2.0 * std::sqrt(s), 1e-12);
  for (const auto& b : r.bound_checks) EXPECT_TRUE(b.satisfied) << b.name;
}
