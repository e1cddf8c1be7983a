#ifndef NPLAB_PLUCKER_HPP
#define NPLAB_PLUCKER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace nplab {

/// Minor index (I, J): 1-based sorted row and column subsets, #I == #J >= 1.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }

  std::string to_string() const {
    auto list = [](const std::vector<std::size_t> &v) {
      std::string s = "{";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(v[k]);
      }
      return s + "}";
    };
    return "(" + list(rows) + "," + list(cols) + ")";
  }

  friend auto operator<=>(const MinorIndex &, const MinorIndex &) = default;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i))
      throw std::overflow_error("binomial: overflow");
    r = r * (n - k + i) / i;
  }
  return r;
}

/// c = sum_k C(m,k) C(w,k): the number of minors of an m x w matrix.
inline std::uint64_t minor_count(std::size_t m, std::size_t w) {
  if (m == 0 || w == 0) throw std::invalid_argument("minor_count: m, w >= 1");
  std::uint64_t c = 0;
  for (std::size_t k = 1; k <= std::min(m, w); ++k)
    c += binomial(m, k) * binomial(w, k);
  return c;
}

namespace detail {

inline void k_subsets(std::size_t n, std::size_t k,
                      std::vector<std::vector<std::size_t>> &out) {
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

} // namespace detail

/// D in the fixed order: ascending size, then lex on I, then lex on J.
inline std::vector<MinorIndex> enumerate_D(std::size_t m, std::size_t w) {
  std::vector<MinorIndex> out;
  for (std::size_t k = 1; k <= std::min(m, w); ++k) {
    std::vector<std::vector<std::size_t>> is, js;
    detail::k_subsets(m, k, is);
    detail::k_subsets(w, k, js);
    for (const auto &i : is)
      for (const auto &j : js) out.push_back({i, j});
  }
  return out;
}

struct PluckerVector {
  std::vector<MinorIndex> index;
  std::vector<Poly> coords;

  std::size_t size() const { return coords.size(); }
};

struct PluckerLimits {
  /// Cap on the total number of terms across all coordinates.
  std::size_t max_terms = 10'000'000;
};

/// All minors of B in enumerate_D order.
inline PluckerVector plucker_embed(const PolyMatrix &b,
                                   const PluckerLimits &limits = {}) {
  PluckerVector out;
  out.index = enumerate_D(b.rows(), b.cols());
  out.coords.reserve(out.index.size());
  std::size_t terms = 0;
  std::vector<std::size_t> ri, ci;
  for (const auto &d : out.index) {
    ri.clear();
    ci.clear();
    for (auto i : d.rows) ri.push_back(i - 1);
    for (auto j : d.cols) ci.push_back(j - 1);
    out.coords.push_back(sym_det(b.submatrix(ri, ci), std::max<std::size_t>(kDefaultDetBound, d.size())));
    terms += out.coords.back().size();
    if (terms > limits.max_terms)
      throw budget_exceeded("plucker_embed: term count exceeds " +
                            std::to_string(limits.max_terms));
  }
  return out;
}

/// Numeric Plücker vector of a rational matrix, same coordinate order.
inline std::vector<Rat> plucker_embed_numeric(const DenseMatrix<Rat> &b) {
  auto pv = plucker_embed(to_poly_matrix(b));
  std::vector<Rat> out;
  out.reserve(pv.size());
  for (const auto &p : pv.coords) out.push_back(p.constant_term());
  return out;
}

/// Rows are the coefficient vectors v_F of every nonconstant monomial F
/// occurring in some coordinate; column j is coordinate j of the Plücker
/// vector. Constant terms are dropped: only linear hyperplanes matter once
/// the constant offset is absorbed.
/// `monomials` labels the monomial axis (rows here, columns in the
/// by-coordinate layout below).
struct CoefficientMatrix {
  RatMatrix matrix;
  std::vector<Monomial> monomials;
};

inline CoefficientMatrix coefficient_matrix(const PluckerVector &pv) {
  std::map<Monomial, SparseRow> rows;
  for (std::size_t j = 0; j < pv.coords.size(); ++j)
    for (const auto &[mono, c] : pv.coords[j].terms()) {
      if (mono.empty()) continue;
      rows[mono].emplace_back(j, c);
    }
  CoefficientMatrix out;
  out.matrix = RatMatrix(0, pv.coords.size());
  out.monomials.reserve(rows.size());
  for (auto &[mono, row] : rows) {
    out.monomials.push_back(mono);
    out.matrix.push_row(std::move(row));
  }
  return out;
}

/// Same data transposed: one row per coordinate, columns indexed by the
/// monomials in canonical order.
inline CoefficientMatrix coefficient_matrix_by_coordinate(const PluckerVector &pv) {
  std::map<Monomial, std::size_t> col_of;
  for (const auto &p : pv.coords)
    for (const auto &[mono, c] : p.terms())
      if (!mono.empty()) col_of.emplace(mono, 0);
  CoefficientMatrix out;
  out.monomials.reserve(col_of.size());
  std::size_t k = 0;
  for (auto &[mono, idx] : col_of) {
    idx = k++;
    out.monomials.push_back(mono);
  }
  out.matrix = RatMatrix(0, col_of.size());
  for (const auto &p : pv.coords) {
    SparseRow row;
    row.reserve(p.size());
    for (const auto &[mono, c] : p.terms())
      if (!mono.empty()) row.emplace_back(col_of.at(mono), c);
    std::sort(row.begin(), row.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    out.matrix.push_row(std::move(row));
  }
  return out;
}

} // namespace nplab

#endif // NPLAB_PLUCKER_HPP
