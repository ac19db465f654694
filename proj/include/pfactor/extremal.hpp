#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include "pfactor/error.hpp"
#include "pfactor/graph.hpp"
#include "pfactor/spectral.hpp"

namespace pfactor {

/// Part sizes of K_s v (K_q u p K_1) on n vertices, where q = n - floor(5s/3) - 1
/// and p = floor(2s/3) + 1. Vertex layout: [0, s) join clique, [s, s+q) big
/// clique, [s+q, n) independent part.
struct ExtremalParams {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t q = 0;
  std::int64_t p = 0;

  static ExtremalParams make(std::int64_t n, std::int64_t s) {
    if (s < 1) detail::fail(ErrorCode::InvalidParams, "s must be >= 1");
    const std::int64_t q = n - (5 * s) / 3 - 1;
    if (q < 1) {
      detail::fail(ErrorCode::InvalidParams, "n = " + std::to_string(n) + " too small for s = " + std::to_string(s) +
                                                 " (need n >= " + std::to_string((5 * s) / 3 + 2) + ")");
    }
    return {n, s, q, (2 * s) / 3 + 1};
  }

  VertexSet join_clique() const { return VertexSet::range(0, static_cast<Vertex>(s)); }

  Cells cells() const {
    Cells c(3);
    for (std::int64_t v = 0; v < n; ++v) c[v < s ? 0 : v < s + q ? 1 : 2].push_back(static_cast<Vertex>(v));
    return c;
  }

  QuotientMatrix quotient() const {
    return {{{s - 1, q, p}, {s, q - 1, 0}, {s, 0, 0}},
            {static_cast<std::size_t>(s), static_cast<std::size_t>(q), static_cast<std::size_t>(p)}};
  }
};

inline Graph build_extremal(std::int64_t n, std::int64_t s) {
  const auto par = ExtremalParams::make(n, s);
  return join(complete(static_cast<std::size_t>(par.s)),
              disjoint_union(complete(static_cast<std::size_t>(par.q)), empty_graph(static_cast<std::size_t>(par.p))));
}

/// E = ((n - f)(n - f - 3) - s(s - 2n + 1) + 2) / 2 with f = floor(5s/3).
inline std::int64_t edge_count_closed_form(std::int64_t n, std::int64_t s) {
  ExtremalParams::make(n, s);
  const std::int64_t f = (5 * s) / 3;
  const std::int64_t twice = (n - f) * (n - f - 3) - s * (s - 2 * n + 1) + 2;
  if (twice % 2 != 0) detail::fail(ErrorCode::ParityViolation, "closed form numerator is odd");
  return twice / 2;
}

/// Spectral radius of the extremal graph via its 3x3 equitable quotient.
inline double rho_closed_form(std::int64_t n, std::int64_t s, double tol = kDefaultTol) {
  return largest_root(ExtremalParams::make(n, s).quotient(), tol);
}

namespace detail {
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

inline void require_admissible_delta(std::int64_t delta) {
  if (delta < 1) fail(ErrorCode::InvalidParams, "minimum degree must be >= 1");
  if (delta % 3 == 0) fail(ErrorCode::DeltaDivisibleBy3, "minimum degree " + std::to_string(delta) + " is divisible by 3");
}
}  // namespace detail

/// Smallest integer n with n >= (20 delta + 53) / 3.
inline std::int64_t n_min_size(std::int64_t delta) {
  detail::require_admissible_delta(delta);
  return detail::ceil_div(20 * delta + 53, 3);
}

/// Smallest integer n with n >= max((6 delta^2 + 22 delta + 31) / 6, (20 delta + 56) / 3).
inline std::int64_t n_min_spectral(std::int64_t delta) {
  detail::require_admissible_delta(delta);
  return std::max(detail::ceil_div(6 * delta * delta + 22 * delta + 31, 6), detail::ceil_div(20 * delta + 56, 3));
}

struct Thresholds {
  std::int64_t n = 0;
  std::int64_t delta = 0;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::int64_t size_threshold = 0;
  double rho_threshold = 0.0;
  std::int64_t n_min_size = 0;
  std::int64_t n_min_spectral = 0;
  bool size_condition_in_range = false;
  bool spectral_condition_in_range = false;
};

/// Edge-count and spectral-radius thresholds for order n and minimum degree delta.
/// Fails with OrderTooSmall only when n is below both order bounds.
inline Thresholds thresholds(std::int64_t n, std::int64_t delta, double tol = kDefaultTol) {
  detail::require_admissible_delta(delta);
  Thresholds t;
  t.n = n;
  t.delta = delta;
  t.n_min_size = n_min_size(delta);
  t.n_min_spectral = n_min_spectral(delta);
  t.size_condition_in_range = n >= t.n_min_size;
  t.spectral_condition_in_range = n >= t.n_min_spectral;
  if (!t.size_condition_in_range && !t.spectral_condition_in_range) {
    detail::fail(ErrorCode::OrderTooSmall, "n = " + std::to_string(n) + " below both order bounds (" +
                                               std::to_string(t.n_min_size) + " for size, " +
                                               std::to_string(t.n_min_spectral) + " for spectral radius)");
  }
  const auto par = ExtremalParams::make(n, delta);
  t.q = par.q;
  t.p = par.p;
  t.size_threshold = edge_count_closed_form(n, delta);
  t.rho_threshold = rho_closed_form(n, delta, tol);
  return t;
}

}  // namespace pfactor
