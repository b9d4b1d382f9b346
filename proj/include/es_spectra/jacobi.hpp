#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "es_spectra/error.hpp"

namespace es_spectra {

/// Dense symmetric real matrix, row-major. Writes go through `set`, which
/// updates both triangles so symmetry holds exactly.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dimension() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  double tol = 1e-12;  // relative to the Frobenius norm of the input
  int max_sweeps = 100;
};

/// Eigenvalues in descending order plus convergence diagnostics.
struct Spectrum {
  std::vector<double> values;
  double off_diagonal_residual = 0.0;
  int sweeps = 0;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.empty() ? 0.0 : values.front(); }
};

namespace detail {

/// Frobenius norm of the strictly off-diagonal part.
inline double off_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * sum);
}

}  // namespace detail

/// Cyclic Jacobi, row-sweep order. A sweep visits every (p, q), p < q, once
/// and annihilates a_pq with a plane rotation. Stops when the off-diagonal
/// Frobenius norm falls to tol * ||M||_F; throws NoConvergence if that does
/// not happen within max_sweeps.
inline Spectrum eigen_spectrum(const SymmetricMatrix& m, const JacobiOptions& opts = {}) {
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
  const std::size_t n = m.dimension();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  const double threshold = opts.tol * m.frobenius_norm();
  Spectrum out;
  double off = detail::off_norm(a, n);
  while (off > threshold) {
    if (out.sweeps >= opts.max_sweeps)
      throw Error(ErrorCode::NoConvergence,
                  "off-diagonal norm " + std::to_string(off) + " above " +
                      std::to_string(threshold) + " after " + std::to_string(out.sweeps) +
                      " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // t = tan(phi) is the smaller root of t^2 + 2 theta t - 1 = 0
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          a[r * n + p] = a[p * n + r] = new_rp;
          a[r * n + q] = a[q * n + r] = new_rq;
        }
      }
    }
    ++out.sweeps;
    off = detail::off_norm(a, n);
  }

  out.off_diagonal_residual = off;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::stable_sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

}  // namespace es_spectra
