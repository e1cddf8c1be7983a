#ifndef NPLAB_LINALG_HPP
#define NPLAB_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nplab {

/// Sparse row: (column, value) pairs with strictly increasing columns and
/// no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;
using RatVector = std::vector<Rat>;

/// Matrix over Q stored as sparse rows. Coefficient matrices built from
/// Plücker coordinates have a handful of nonzeros per row, so this is the
/// primary representation; small inputs are routed to a dense fraction-free
/// elimination instead (see rank()).
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static RatMatrix from_dense(const std::vector<RatVector> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("RatMatrix::from_dense: ragged rows");
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[i][j] != 0) m.rows_[i].emplace_back(j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto &r : rows_) n += r.size();
    return n;
  }

  Rat at(std::size_t i, std::size_t j) const {
    check(i, j);
    const auto &r = rows_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const auto &e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : Rat(0);
  }

  void set(std::size_t i, std::size_t j, const Rat &v) {
    check(i, j);
    auto &r = rows_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const auto &e, std::size_t c) { return e.first < c; });
    bool present = it != r.end() && it->first == j;
    if (v == 0) {
      if (present) r.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      r.insert(it, {j, v});
    }
  }

  /// Appends a row; entries must be sorted by column and nonzero.
  void push_row(SparseRow row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].first >= cols_ || row[k].second == 0 ||
          (k > 0 && row[k - 1].first >= row[k].first))
        throw std::invalid_argument("RatMatrix::push_row: malformed row");
    }
    rows_.push_back(std::move(row));
  }

  const SparseRow &row(std::size_t i) const { return rows_.at(i); }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto &[j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
    return t;
  }

  std::vector<RatVector> to_dense() const {
    std::vector<RatVector> out(rows_.size(), RatVector(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto &[j, v] : rows_[i]) out[i][j] = v;
    return out;
  }

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_)
      throw std::out_of_range("RatMatrix: index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

namespace detail {

/// a - factor * b on sorted sparse rows.
inline SparseRow axpy(const SparseRow &a, const Rat &factor,
                      const SparseRow &b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -factor * ib->second);
      ++ib;
    } else {
      Rat v = ia->second - factor * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// Incremental sparse row echelon form. Each stored row has leading entry 1
/// and carries the combination of original rows that produced it.
class SparseEchelon {
public:
  explicit SparseEchelon(bool track) : track_(track) {}

  /// Reduces row (original index `origin`) against the basis. Returns the
  /// combination if the row reduced to zero and tracking is on.
  std::optional<SparseRow> insert(SparseRow row, std::size_t origin) {
    SparseRow combo;
    if (track_) combo.emplace_back(origin, Rat(1));
    while (!row.empty()) {
      auto lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Rat inv = 1 / row.front().second;
        for (auto &e : row) e.second *= inv;
        if (track_)
          for (auto &e : combo) e.second *= inv;
        pivots_.emplace(lead, Entry{std::move(row), std::move(combo)});
        return std::nullopt;
      }
      Rat factor = row.front().second;
      row = axpy(row, factor, it->second.row);
      if (track_) combo = axpy(combo, factor, it->second.combo);
    }
    if (track_) return combo;
    return SparseRow{};
  }

  std::size_t rank() const { return pivots_.size(); }

  /// Fully reduced echelon rows in pivot order.
  std::vector<SparseRow> reduced_rows() const {
    std::vector<SparseRow> rows;
    std::vector<std::size_t> leads;
    for (const auto &[lead, e] : pivots_) {
      rows.push_back(e.row);
      leads.push_back(lead);
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
      for (std::size_t i = 0; i < k; ++i) {
        auto &r = rows[i];
        auto it = std::lower_bound(
            r.begin(), r.end(), leads[k],
            [](const auto &e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == leads[k]) {
          Rat factor = it->second;
          r = axpy(r, factor, rows[k]);
        }
      }
    }
    return rows;
  }

private:
  struct Entry {
    SparseRow row;
    SparseRow combo;
  };
  bool track_;
  std::map<std::size_t, Entry> pivots_;
};

/// Fraction-free (Bareiss) rank of a dense integer matrix, modified in place.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

} // namespace detail

/// Dense route: clears denominators row by row and runs Bareiss elimination
/// over Z.
inline std::size_t rank_dense(const RatMatrix &m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (const auto &[j, v] : m.row(i))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (const auto &[j, v] : m.row(i)) a[i][j] = v.get_num() * (l / v.get_den());
  }
  return detail::bareiss_rank(std::move(a));
}

/// Sparse route: incremental rational elimination.
inline std::size_t rank_sparse(const RatMatrix &m) {
  detail::SparseEchelon ech(false);
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i), i);
  return ech.rank();
}

/// Exact rank. Matrices below 64x64 use the dense fraction-free route.
inline std::size_t rank(const RatMatrix &m) {
  if (m.rows() < 64 && m.cols() < 64) return rank_dense(m);
  return rank_sparse(m);
}

/// Rank together with a basis of the left kernel {v : v M = 0}.
struct KernelResult {
  std::size_t rank = 0;
  std::vector<RatVector> basis;
};

inline KernelResult rank_and_left_kernel(const RatMatrix &m) {
  detail::SparseEchelon ech(true);
  KernelResult out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (auto combo = ech.insert(m.row(i), i)) {
      RatVector v(m.rows());
      for (const auto &[j, c] : *combo) v[j] = c;
      out.basis.push_back(std::move(v));
    }
  }
  out.rank = ech.rank();
  return out;
}

inline std::vector<RatVector> left_kernel_basis(const RatMatrix &m) {
  return rank_and_left_kernel(m).basis;
}

/// Reduced row echelon basis of the row space; rows() == rank(m).
inline RatMatrix row_space_basis(const RatMatrix &m) {
  detail::SparseEchelon ech(false);
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i), i);
  RatMatrix out(0, m.cols());
  for (auto &r : ech.reduced_rows()) out.push_row(std::move(r));
  return out;
}

/// v M as a dense vector.
inline RatVector left_multiply(const RatVector &v, const RatMatrix &m) {
  if (v.size() != m.rows())
    throw std::invalid_argument("left_multiply: length mismatch");
  RatVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (const auto &[j, x] : m.row(i)) out[j] += v[i] * x;
  }
  return out;
}

} // namespace nplab

#endif // NPLAB_LINALG_HPP
