#pragma once

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include <json.hpp>

#include "es_spectra/checks.hpp"
#include "es_spectra/chem.hpp"
#include "es_spectra/spectral.hpp"

namespace es_spectra::report {

using Json = nlohmann::ordered_json;

/// Rounds to `digits` significant digits; the JSON writer then emits the
/// shortest representation, which has at most that many digits.
inline double significant(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline Json number(double x) { return significant(x); }

inline Json number(const std::optional<double>& x) {
  return x ? Json(significant(*x)) : Json(nullptr);
}

inline std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  // keep "-0.0000" out of the text output
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

inline Json eigenvalues(const Spectrum& s) {
  Json arr = Json::array();
  for (double v : s.values) arr.push_back(number(v));
  return arr;
}

inline Json bounds(const std::vector<BoundCheck>& checks) {
  Json arr = Json::array();
  for (const auto& b : checks) {
    arr.push_back({{"name", b.name},
                   {"lower", number(b.lower)},
                   {"observed", number(b.observed)},
                   {"upper", number(b.upper)},
                   {"pass", b.satisfied}});
  }
  return arr;
}

/// {"scheme", "n", "eigenvalues", "energy", "fi", "sz", "index", "bounds"}
inline Json energy(const EnergyReport& r) {
  return {{"scheme", std::string(to_string(r.scheme))},
          {"n", r.spectrum.size()},
          {"eigenvalues", eigenvalues(r.spectrum)},
          {"energy", number(r.energy)},
          {"fi", number(r.fi)},
          {"sz", number(r.sz)},
          {"index", number(r.index_value)},
          {"bounds", bounds(r.bound_checks)}};
}

inline Json spectrum(WeightScheme scheme, const Spectrum& s) {
  return {{"scheme", std::string(to_string(scheme))},
          {"n", s.size()},
          {"eigenvalues", eigenvalues(s)},
          {"off_diagonal_residual", number(s.off_diagonal_residual)},
          {"sweeps", s.sweeps}};
}

inline Json checks(std::size_t n, const CheckReport& r) {
  Json items = Json::array();
  for (const auto& c : r.items) {
    Json values = Json::object();
    for (const auto& [k, v] : c.values) values[k] = number(v);
    items.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"attained", c.attained}, {"values", values}});
  }
  return {{"n", n}, {"checks", items}, {"pass", r.all_pass()}};
}

inline Json correlations(const chem::CorrelationReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"group", p.group}, {"x", p.x_label}, {"y", p.y_label}, {"r", number(p.r)}});
  return {{"source", std::string(chem::to_string(r.source))}, {"pairs", pairs}};
}

}  // namespace es_spectra::report
