#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "es_spectra/error.hpp"
#include "es_spectra/graph.hpp"

namespace es_spectra {

/// Edge-weight function selector. ADJ gives the plain 0/1 adjacency matrix.
enum class WeightScheme { ES, SO, FI, SZ, ADJ };

inline constexpr std::array<WeightScheme, 5> kAllSchemes{
    WeightScheme::ES, WeightScheme::SO, WeightScheme::FI, WeightScheme::SZ, WeightScheme::ADJ};

constexpr std::string_view to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::ES: return "es";
    case WeightScheme::SO: return "so";
    case WeightScheme::FI: return "fi";
    case WeightScheme::SZ: return "sz";
    case WeightScheme::ADJ: return "adj";
  }
  return "";
}

inline std::optional<WeightScheme> parse_scheme(std::string_view name) {
  for (auto s : kAllSchemes)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Weight of an edge whose endpoints have degrees `di` and `dj`.
///   ES  sqrt(di^2 + dj^2 + di*dj)     (Euler-Sombor)
///   SO  sqrt(di^2 + dj^2)             (Sombor)
///   FI  di^2 + dj^2                   (forgotten)
///   SZ  di*dj                         (second Zagreb)
///   ADJ 1
inline double edge_weight(WeightScheme scheme, std::size_t di, std::size_t dj) {
  if (di < 1 || dj < 1)
    throw Error(ErrorCode::NonPositiveDegree,
                "degrees must be >= 1, got (" + std::to_string(di) + ", " + std::to_string(dj) + ")");
  const double a = static_cast<double>(di);
  const double b = static_cast<double>(dj);
  switch (scheme) {
    case WeightScheme::ES: return std::sqrt(a * a + b * b + a * b);
    case WeightScheme::SO: return std::sqrt(a * a + b * b);
    case WeightScheme::FI: return a * a + b * b;
    case WeightScheme::SZ: return a * b;
    case WeightScheme::ADJ: return 1.0;
  }
  throw Error(ErrorCode::UnsupportedScheme, "unknown weight scheme");
}

/// Degree-based topological index: sum of edge weights over all edges.
inline double index(const Graph& g, WeightScheme scheme) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += edge_weight(scheme, g.degree(e.u), g.degree(e.v));
  return total;
}

}  // namespace es_spectra
