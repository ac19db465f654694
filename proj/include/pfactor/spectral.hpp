#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfactor/error.hpp"
#include "pfactor/graph.hpp"

namespace pfactor {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIter = 100000;

struct SpectralResult {
  double rho = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
};

namespace detail {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
};

inline Csr to_csr(const Graph& g) {
  Csr csr;
  csr.offsets.reserve(g.order() + 1);
  csr.offsets.push_back(0);
  csr.targets.reserve(2 * g.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) csr.targets.push_back(w);
    csr.offsets.push_back(csr.targets.size());
  }
  return csr;
}

// y = (A + I) x
inline void shifted_matvec(const Csr& a, std::span<const double> x, std::span<double> y) {
  for (std::size_t v = 0; v + 1 < a.offsets.size(); ++v) {
    double acc = x[v];
    for (std::size_t k = a.offsets[v]; k < a.offsets[v + 1]; ++k) acc += x[a.targets[k]];
    y[v] = acc;
  }
}

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace detail

/// Largest adjacency eigenvalue of a connected graph.
///
/// Power iteration on A + I from the all-ones vector. The shift keeps the
/// iteration from oscillating on bipartite graphs; since A + I is positive on
/// the Perron vector's support and the start vector is positive, the iterate
/// never loses the dominant component. Each step reports the Rayleigh quotient
/// mu = x'(A+I)x of the unit iterate and stops once ||(A+I)x - mu x|| <= tol,
/// which bounds the distance from mu to an eigenvalue of A + I by tol.
inline SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol,
                                      std::size_t max_iter = kDefaultMaxIter) {
  if (!(tol > 0.0)) detail::fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!is_connected(g)) detail::fail(ErrorCode::NotConnected, "spectral_radius requires a connected graph");

  const std::size_t n = g.order();
  const detail::Csr a = detail::to_csr(g);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);

  SpectralResult result;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    detail::shifted_matvec(a, x, y);
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += x[i] * y[i];
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = y[i] - mu * x[i];
      r2 += d * d;
    }
    result.rho = mu - 1.0;
    result.iterations = it;
    result.residual = std::sqrt(r2);
    if (result.residual <= tol) return result;

    const double len = detail::norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / len;
  }
  detail::fail(ErrorCode::NoConvergence, "power iteration did not converge in " + std::to_string(max_iter) +
                                             " iterations (residual " + std::to_string(result.residual) + ")");
}

/// Largest eigenvalue of a possibly disconnected graph: the maximum over its
/// components.
inline double spectral_radius_any(const Graph& g, double tol = kDefaultTol,
                                  std::size_t max_iter = kDefaultMaxIter) {
  const auto labels = component_labels(g);
  const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  if (count <= 1) return spectral_radius(g, tol, max_iter).rho;
  double best = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
      if (labels[v] == c) members.push_back(v);
    if (members.size() < 2) continue;
    best = std::max(best, spectral_radius(induced_subgraph(g, members), tol, max_iter).rho);
  }
  return best;
}

/// Hong's upper bound sqrt(2m - n + 1).
inline double hong_bound(const Graph& g) {
  const auto radicand = 2 * static_cast<long long>(g.size()) - static_cast<long long>(g.order()) + 1;
  if (radicand < 0) detail::fail(ErrorCode::NegativeRadicand, "2m - n + 1 = " + std::to_string(radicand));
  return std::sqrt(static_cast<double>(radicand));
}

/// The radicand 2m - n + 1 itself, exact.
inline long long hong_radicand(const Graph& g) {
  return 2 * static_cast<long long>(g.size()) - static_cast<long long>(g.order()) + 1;
}

// Equitable quotients -------------------------------------------------------

/// entries[r][c] is the number of neighbours every vertex of cell r has in
/// cell c. Only produced from partitions verified to be equitable.
struct QuotientMatrix {
  std::vector<std::vector<std::int64_t>> entries;
  std::vector<std::size_t> cell_sizes;

  std::size_t dim() const noexcept { return entries.size(); }
};

using Cells = std::vector<std::vector<Vertex>>;

inline QuotientMatrix quotient_from_cells(const Graph& g, const Cells& cells) {
  const std::size_t k = cells.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(g.order(), unset);
  for (std::size_t c = 0; c < k; ++c) {
    if (cells[c].empty()) detail::fail(ErrorCode::InvalidArgument, "cell " + std::to_string(c) + " is empty");
    for (Vertex v : cells[c]) {
      if (v >= g.order()) detail::fail(ErrorCode::VertexOutOfRange, "cell vertex " + std::to_string(v));
      if (cell_of[v] != unset) detail::fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " in two cells");
      cell_of[v] = c;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cell_of[v] == unset) detail::fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " in no cell");
  }

  QuotientMatrix q;
  q.entries.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t c = 0; c < k; ++c) q.cell_sizes.push_back(cells[c].size());

  std::vector<std::int64_t> counts(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t idx = 0; idx < cells[r].size(); ++idx) {
      const Vertex v = cells[r][idx];
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
      if (idx == 0) {
        q.entries[r] = counts;
        continue;
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] != q.entries[r][c]) {
          detail::fail(ErrorCode::NotEquitable, "vertex " + std::to_string(v) + " has " + std::to_string(counts[c]) +
                                                    " neighbours in cell " + std::to_string(c) + ", cell " +
                                                    std::to_string(r) + " expects " + std::to_string(q.entries[r][c]));
        }
      }
    }
  }
  return q;
}

namespace detail {

using Int = __int128;

/// Coefficients c[0..k] of det(xI - Q) = sum c[i] x^i, by Faddeev-LeVerrier.
/// Exact for integer matrices (every division below is exact).
inline std::vector<Int> char_poly(const std::vector<std::vector<std::int64_t>>& q) {
  const std::size_t k = q.size();
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k, 0));  // M_0 = 0
  std::vector<Int> c(k + 1, 0);
  c[k] = 1;
  std::vector<std::vector<Int>> am(k, std::vector<Int>(k, 0));
  for (std::size_t step = 1; step <= k; ++step) {
    // M_step = Q M_{step-1} + c[k-step+1] I
    std::vector<std::vector<Int>> next(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Int acc = 0;
        for (std::size_t l = 0; l < k; ++l) acc += static_cast<Int>(q[i][l]) * m[l][j];
        next[i][j] = acc + (i == j ? c[k - step + 1] : 0);
      }
    }
    m = std::move(next);
    Int trace = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) trace += static_cast<Int>(q[i][l]) * m[l][i];
    c[k - step] = -trace / static_cast<Int>(step);
  }
  return c;
}

inline long double eval_poly(const std::vector<long double>& c, long double x) {
  long double acc = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline std::vector<long double> derivative(const std::vector<long double>& c) {
  std::vector<long double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  return d;
}

/// Largest real root of a polynomial with positive leading coefficient whose
/// roots all lie in [-bound, bound]. The largest root of the derivative splits
/// off an interval on which p is increasing; bisection runs there.
inline std::optional<long double> largest_real_root(const std::vector<long double>& c, long double bound,
                                                    long double tol) {
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return std::nullopt;
  if (deg == 1) return -c[0] / c[1];

  long double lo = -bound;
  if (auto crit = largest_real_root(derivative(c), bound, tol)) lo = std::max(lo, *crit);
  long double hi = bound;
  if (eval_poly(c, lo) > 0.0L) return std::nullopt;
  if (eval_poly(c, hi) < 0.0L) return std::nullopt;

  while (hi - lo > tol / 10) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (eval_poly(c, mid) < 0.0L) lo = mid; else hi = mid;
  }
  long double x = lo + (hi - lo) / 2;
  const long double slope = eval_poly(derivative(c), x);
  if (slope > 0.0L) {
    const long double polished = x - eval_poly(c, x) / slope;
    if (std::fabs(polished - x) <= tol) x = polished;
  }
  return x;
}

}  // namespace detail

/// Largest real eigenvalue of a quotient matrix (dimension at most 4), from its
/// exact characteristic polynomial. Eigenvalues of a nonnegative matrix lie in
/// [-R, R] with R the largest row sum.
inline double largest_root(const QuotientMatrix& q, double tol = kDefaultTol) {
  const std::size_t k = q.dim();
  if (k == 0 || k > 4) detail::fail(ErrorCode::InvalidParams, "quotient dimension must be 1..4");
  std::int64_t bound = 0;
  for (const auto& row : q.entries) {
    if (row.size() != k) detail::fail(ErrorCode::InvalidArgument, "quotient matrix is not square");
    std::int64_t sum = 0;
    for (std::int64_t e : row) {
      if (e < 0) detail::fail(ErrorCode::InvalidArgument, "quotient entries must be nonnegative");
      sum += e;
    }
    bound = std::max(bound, sum);
  }
  const auto exact = detail::char_poly(q.entries);
  std::vector<long double> c(exact.begin(), exact.end());
  const auto root = detail::largest_real_root(c, static_cast<long double>(bound), static_cast<long double>(tol));
  if (!root) detail::fail(ErrorCode::NoRealRootInBracket, "no sign change on [-R, R]");
  return static_cast<double>(*root);
}

/// True iff h is a subgraph of g (h's vertex i is g's vertex i).
inline bool is_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  for (const Edge& e : h.edges())
    if (!g.adjacent(e.u, e.v)) return false;
  return true;
}

/// Checks rho(g) >= rho(h) for a subgraph h of a connected graph g.
inline bool monotonicity_check(const Graph& g, const Graph& h, double tol = kDefaultTol) {
  if (!is_subgraph(g, h)) detail::fail(ErrorCode::NotSubgraph, "h has an edge missing from g");
  const double rg = spectral_radius(g, tol).rho;
  const double rh = spectral_radius_any(h, tol);
  return rg >= rh - 2 * tol;
}

}  // namespace pfactor
