#ifndef NPLAB_EXPONENTS_HPP
#define NPLAB_EXPONENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace nplab {

/// Real m x n matrix for exponent estimation, optionally with exact
/// rational entries used to confirm suspected zero residuals.
struct RealMatrix {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> values; ///< row-major
  std::optional<std::vector<Rat>> exact;

  static RealMatrix from_doubles(std::size_t m, std::size_t n,
                                 std::vector<double> v) {
    if (v.size() != m * n) throw std::invalid_argument("RealMatrix: size mismatch");
    return {m, n, std::move(v), std::nullopt};
  }

  static RealMatrix from_rationals(std::size_t m, std::size_t n,
                                   std::vector<Rat> v) {
    if (v.size() != m * n) throw std::invalid_argument("RealMatrix: size mismatch");
    std::vector<double> d;
    d.reserve(v.size());
    for (const auto &q : v) d.push_back(q.get_d());
    return {m, n, std::move(d), std::move(v)};
  }

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct ExponentEstimate {
  double value = 0.0;
  bool infinite = false;
  std::vector<long> best_q;
  std::vector<long> best_p;
  long Q = 0;
  long q_min = 0;
  /// Candidates whose ratio was defined (nonzero denominator or zero residual).
  std::uint64_t candidates = 0;
};

struct ExponentOptions {
  /// Residuals below this trigger the exact recheck, or are clamped up to it
  /// when no exact entries are available.
  double zero_tolerance = 1e-12;
  /// Finite ratios are only taken over q_min <= |q|_inf <= Q. Zero or
  /// negative selects ceil(sqrt(Q)); 1 scans the whole box.
  long q_min = 0;
};

inline long effective_q_min(long Q, const ExponentOptions &opt) {
  if (opt.q_min > 0) return opt.q_min;
  long r = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(Q))));
  while (r > 1 && (r - 1) * (r - 1) >= Q) --r;
  return std::max(2L, r);
}

namespace detail {

enum class ExponentKind { Uniform, Multiplicative };

/// |(A q)_i - p_i| computed exactly for rational A.
inline double exact_residual(const RealMatrix &a, std::size_t row,
                             const std::vector<long> &q, long p) {
  Rat s = 0;
  for (std::size_t j = 0; j < a.n; ++j) s += (*a.exact)[row * a.n + j] * Rat(q[j]);
  s -= Rat(p);
  return std::fabs(s.get_d());
}

/// Scans every q in [-Q, Q]^n whose first nonzero coordinate is positive,
/// in lexicographic order. The ratio is invariant under q -> -q, so this
/// sees every candidate value once.
///
/// A zero residual at q repeats at every multiple of q, so it makes the
/// estimate +inf wherever in the box it occurs; the reported witness is the
/// one of least sup norm. Finite ratios are restricted to the tail window
/// |q|_inf >= q_min. Ties keep the first maximizer in scan order.
inline ExponentEstimate scan(const RealMatrix &a, long Q, ExponentKind kind,
                             const ExponentOptions &opt) {
  if (Q < 2) throw std::invalid_argument("exponent estimate: Q must be >= 2");
  if (a.m == 0 || a.n == 0)
    throw std::invalid_argument("exponent estimate: empty matrix");
  if (a.values.size() != a.m * a.n)
    throw std::invalid_argument("exponent estimate: malformed matrix");
  const std::size_t m = a.m, n = a.n;
  const long q_min = effective_q_min(Q, opt);

  // log(max(|q|, 1)) for |q| <= Q.
  std::vector<double> logs(static_cast<std::size_t>(Q) + 1, 0.0);
  for (long k = 2; k <= Q; ++k)
    logs[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k));

  ExponentEstimate best;
  best.Q = Q;
  best.q_min = q_min;
  best.value = -std::numeric_limits<double>::infinity();
  long inf_norm = std::numeric_limits<long>::max();

  std::vector<long> q(n, 0), p(m);
  std::vector<double> residual(m);
  q[n - 1] = 1;

  for (;;) {
    long norm = 0;
    for (long x : q) norm = std::max(norm, std::labs(x));

    bool any_zero = false;
    double sup = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * static_cast<double>(q[j]);
      double pi = std::nearbyint(s);
      p[i] = static_cast<long>(pi);
      double r = std::fabs(s - pi);
      if (r < opt.zero_tolerance)
        r = a.exact ? exact_residual(a, i, q, p[i]) : opt.zero_tolerance;
      residual[i] = r;
      if (r == 0.0) any_zero = true;
      sup = std::max(sup, r);
    }

    const bool inf = kind == ExponentKind::Uniform ? sup == 0.0 : any_zero;
    if (inf) {
      ++best.candidates;
      if (norm < inf_norm) {
        inf_norm = norm;
        best.value = std::numeric_limits<double>::infinity();
        best.infinite = true;
        best.best_q = q;
        best.best_p = p;
      }
    } else if (!best.infinite && norm >= q_min) {
      double num = 0.0, den = 0.0;
      if (kind == ExponentKind::Uniform) {
        den = logs[static_cast<std::size_t>(norm)];
        num = -std::log(sup);
      } else {
        for (long x : q) den += logs[static_cast<std::size_t>(std::labs(x))];
        for (double r : residual) num -= std::log(r);
      }
      if (den > 0.0) {
        ++best.candidates;
        double ratio = num / den;
        if (ratio > best.value) {
          best.value = ratio;
          best.best_q = q;
          best.best_p = p;
        }
      }
    }

    // Odometer increment, last coordinate fastest; stop after (Q, ..., Q).
    std::size_t k = n;
    while (k-- > 0) {
      if (q[k] < Q) {
        ++q[k];
        break;
      }
      q[k] = -Q;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

} // namespace detail

/// Max over q_min <= |q|_inf <= Q of -log|Aq - p|_inf / log|q|_inf, with p
/// the nearest integer vector to Aq. A zero residual anywhere in the box
/// gives +inf.
inline ExponentEstimate estimate_omega(const RealMatrix &a, long Q,
                                       const ExponentOptions &opt = {}) {
  return detail::scan(a, Q, detail::ExponentKind::Uniform, opt);
}

/// Max of -log prod_i |(Aq - p)_i| / log prod_j max(|q_j|, 1) over the same
/// window; candidates with a zero denominator are skipped. Any zero residual
/// component gives +inf.
inline ExponentEstimate estimate_omega_x(const RealMatrix &a, long Q,
                                         const ExponentOptions &opt = {}) {
  return detail::scan(a, Q, detail::ExponentKind::Multiplicative, opt);
}

/// psi_{m,n}(X) = X (+) X^2 (+) ... (+) X^n as an m x (m n) real matrix.
/// When X is given exactly the powers are computed exactly too.
inline RealMatrix matrix_veronese(const DenseMatrix<double> &x, std::size_t n,
                                  const std::optional<DenseMatrix<Rat>> &exact = {}) {
  const std::size_t m = x.rows();
  RealMatrix out;
  out.m = m;
  out.n = m * n;
  out.values.assign(m * m * n, 0.0);
  DenseMatrix<double> power = x;
  for (std::size_t l = 0; l < n; ++l) {
    if (l > 0) power = matmul(power, x);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < m; ++t) out.values[i * out.n + l * m + t] = power(i, t);
  }
  if (exact) {
    std::vector<Rat> ex(m * m * n);
    DenseMatrix<Rat> pw = *exact;
    for (std::size_t l = 0; l < n; ++l) {
      if (l > 0) pw = matmul(pw, *exact);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < m; ++t) ex[i * out.n + l * m + t] = pw(i, t);
    }
    out.exact = std::move(ex);
  }
  return out;
}

struct BakerOptions {
  std::size_t m = 1;
  std::size_t n = 2;
  long Q = 2000;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  /// Samples used verbatim for the first trials (row-major m x m).
  std::vector<std::vector<Rat>> forced;
  ExponentOptions exponent{};
};

struct BakerTrial {
  std::vector<double> sample;
  bool forced = false;
  ExponentEstimate estimate;
};

struct BakerReport {
  BakerOptions options;
  std::vector<BakerTrial> trials;
  /// Over finite estimates only; nullopt when there are none.
  std::optional<double> median;
  std::optional<double> max;
  std::size_t infinite_count = 0;
};

/// Uniform double in [0, 1) from the top 53 bits; identical on every
/// platform for a given mt19937_64 seed.
inline double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Samples X uniformly in [0,1]^{m x m}, estimates omega_x(psi_{m,n}(X)).
inline BakerReport baker_experiment(const BakerOptions &opt) {
  if (opt.trials == 0) throw std::invalid_argument("baker_experiment: trials >= 1");
  if (opt.m == 0 || opt.n == 0)
    throw std::invalid_argument("baker_experiment: m, n >= 1");
  BakerReport rep;
  rep.options = opt;
  std::mt19937_64 rng(opt.seed);
  std::vector<double> finite;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    BakerTrial t;
    DenseMatrix<double> x(opt.m, opt.m);
    std::optional<DenseMatrix<Rat>> exact;
    if (trial < opt.forced.size()) {
      const auto &f = opt.forced[trial];
      if (f.size() != opt.m * opt.m)
        throw std::invalid_argument("baker_experiment: forced sample has wrong size");
      exact = DenseMatrix<Rat>(opt.m, opt.m);
      for (std::size_t k = 0; k < f.size(); ++k) {
        x(k / opt.m, k % opt.m) = f[k].get_d();
        (*exact)(k / opt.m, k % opt.m) = f[k];
      }
      t.forced = true;
    } else {
      for (std::size_t i = 0; i < opt.m; ++i)
        for (std::size_t j = 0; j < opt.m; ++j) x(i, j) = unit_uniform(rng);
    }
    for (std::size_t i = 0; i < opt.m; ++i)
      for (std::size_t j = 0; j < opt.m; ++j) t.sample.push_back(x(i, j));
    t.estimate = estimate_omega_x(matrix_veronese(x, opt.n, exact), opt.Q, opt.exponent);
    if (t.estimate.infinite)
      ++rep.infinite_count;
    else
      finite.push_back(t.estimate.value);
    rep.trials.push_back(std::move(t));
  }
  if (!finite.empty()) {
    std::sort(finite.begin(), finite.end());
    const std::size_t k = finite.size();
    rep.median = (k % 2) ? finite[k / 2] : 0.5 * (finite[k / 2 - 1] + finite[k / 2]);
    rep.max = finite.back();
  }
  return rep;
}

} // namespace nplab

#endif // NPLAB_EXPONENTS_HPP
