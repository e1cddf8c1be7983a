#ifndef NPLAB_POLY_HPP
#define NPLAB_POLY_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "multiset.hpp"
#include "rational.hpp"

namespace nplab {

enum class VarKind : std::uint8_t {
  Edge,  ///< A[i,t,q]: entry (i,t) of the generic matrix X_q
  Param, ///< x<k>: parameter of a polynomial map
  CoefA, ///< a[i,j]: entry of the A matrix in det(A Y + B)
  CoefB, ///< b[i,j]: entry of the B matrix in det(A Y + B)
  Aux,   ///< t<k>: auxiliary variable (Rabinowitsch)
  Imag,  ///< I: imaginary unit, reduced with I^2 = -1 where needed
};

/// Variable identifier. Indices are 1-based; unused slots are zero.
struct VarId {
  VarKind kind = VarKind::Param;
  std::uint16_t i = 0;
  std::uint16_t j = 0;
  std::uint16_t k = 0;

  static VarId edge(unsigned row, unsigned col, unsigned gen) {
    if (row == 0 || col == 0 || gen == 0)
      throw std::invalid_argument("VarId::edge: indices start at 1");
    return {VarKind::Edge, static_cast<std::uint16_t>(row),
            static_cast<std::uint16_t>(col), static_cast<std::uint16_t>(gen)};
  }
  static VarId param(unsigned index) {
    if (index == 0) throw std::invalid_argument("VarId::param: x0 is invalid");
    return {VarKind::Param, static_cast<std::uint16_t>(index), 0, 0};
  }
  static VarId coef_a(unsigned row, unsigned col) {
    return {VarKind::CoefA, static_cast<std::uint16_t>(row),
            static_cast<std::uint16_t>(col), 0};
  }
  static VarId coef_b(unsigned row, unsigned col) {
    return {VarKind::CoefB, static_cast<std::uint16_t>(row),
            static_cast<std::uint16_t>(col), 0};
  }
  static VarId aux(unsigned index = 0) {
    return {VarKind::Aux, static_cast<std::uint16_t>(index), 0, 0};
  }
  static VarId imag() { return {VarKind::Imag, 0, 0, 0}; }

  friend auto operator<=>(const VarId &, const VarId &) = default;

  std::string to_string() const {
    std::ostringstream os;
    switch (kind) {
    case VarKind::Edge:
      os << "A[" << i << ',' << j << ',' << k << ']';
      break;
    case VarKind::Param:
      os << 'x' << i;
      break;
    case VarKind::CoefA:
      os << "a[" << i << ',' << j << ']';
      break;
    case VarKind::CoefB:
      os << "b[" << i << ',' << j << ']';
      break;
    case VarKind::Aux:
      os << 't' << i;
      break;
    case VarKind::Imag:
      os << 'I';
      break;
    }
    return os.str();
  }
};

inline std::ostream &operator<<(std::ostream &os, const VarId &v) {
  return os << v.to_string();
}

using Monomial = Multiset<VarId>;

inline std::string monomial_to_string(const Monomial &mono) {
  if (mono.empty()) return "1";
  std::string s;
  bool first = true;
  for (const auto &[v, e] : mono) {
    if (!first) s += '*';
    first = false;
    s += v.to_string();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

inline std::size_t degree(const Monomial &mono) { return mono.cardinality(); }

/// Sparse polynomial over Q. Terms are kept in a map ordered by the
/// canonical monomial order (lexicographic on sorted variable lists); zero
/// coefficients are never stored.
class Poly {
public:
  using term_map = std::map<Monomial, Rat>;

  Poly() = default;
  Poly(const Rat &c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(Rat(c)) {}
  Poly(int c) : Poly(Rat(c)) {}

  static Poly var(const VarId &v) { return monomial(Monomial{{v, 1}}); }

  static Poly monomial(const Monomial &m, const Rat &c = Rat(1)) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const term_map &terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Rat constant_term() const { return coefficient(Monomial{}); }

  Rat coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.cardinality());
    return d;
  }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto &[m, c] : terms_)
      for (const auto &[v, e] : m) vs.insert(v);
    return vs;
  }

  /// Adds c * m in place.
  void add_term(const Monomial &m, const Rat &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly &operator+=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly &operator-=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly &operator*=(const Poly &o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto &[m, c] : a.terms_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }

  Poly scaled(const Rat &c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto &[m, v] : out.terms_) v *= c;
    return out;
  }

  Poly pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Substitutes polynomials for some variables; others are left alone.
  Poly substitute(const std::map<VarId, Poly> &values) const {
    Poly out;
    for (const auto &[m, c] : terms_) {
      Poly term(c);
      Monomial rest;
      for (const auto &[v, e] : m) {
        auto it = values.find(v);
        if (it == values.end())
          rest.add(v, e);
        else
          term *= it->second.pow(e);
      }
      out += term * Poly::monomial(rest);
    }
    return out;
  }

  /// Full evaluation at rational values; throws if a variable is missing.
  Rat evaluate(const std::map<VarId, Rat> &values) const {
    Rat total = 0;
    for (const auto &[m, c] : terms_) {
      Rat t = c;
      for (const auto &[v, e] : m) {
        auto it = values.find(v);
        if (it == values.end())
          throw std::out_of_range("Poly::evaluate: no value for " +
                                  v.to_string());
        Rat x = it->second;
        for (unsigned k = 0; k < e; ++k) t *= x;
      }
      total += t;
    }
    return total;
  }

  /// Terms in descending canonical order, e.g. "3*A[1,2,1]^2*A[2,1,1] - 1/2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto &[m, c] = *it;
      Rat mag = abs(c);
      bool neg = c < 0;
      if (first) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (m.empty()) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "*";
        s += monomial_to_string(m);
      }
    }
    return s;
  }

  friend bool operator==(const Poly &, const Poly &) = default;

private:
  term_map terms_;
};

inline std::ostream &operator<<(std::ostream &os, const Poly &p) {
  return os << p.to_string();
}

inline Poly poly_add(const Poly &p, const Poly &q) { return p + q; }
inline Poly poly_mul(const Poly &p, const Poly &q) { return p * q; }
inline Rat coefficient(const Poly &p, const Monomial &f) {
  return p.coefficient(f);
}

using PolyMatrix = DenseMatrix<Poly>;

/// m x m matrix whose (i,t) entry is the variable A[i,t,q].
inline PolyMatrix generic_matrix(std::size_t m, unsigned q) {
  if (m == 0) throw std::invalid_argument("generic_matrix: size must be >= 1");
  if (q == 0) throw std::invalid_argument("generic_matrix: q starts at 1");
  PolyMatrix x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < m; ++t)
      x(i, t) = Poly::var(VarId::edge(static_cast<unsigned>(i + 1),
                                      static_cast<unsigned>(t + 1), q));
  return x;
}

inline PolyMatrix poly_matmul(const PolyMatrix &p, const PolyMatrix &q) {
  return matmul(p, q);
}

inline constexpr std::size_t kDefaultDetBound = 8;

/// Exact determinant by cofactor expansion, memoized on column subsets:
/// minors of the trailing rows are shared across all leading-row choices.
/// Sign convention matches sgn(sigma) over the row-ordered bijection.
inline Poly sym_det(const PolyMatrix &m, std::size_t bound = kDefaultDetBound) {
  if (!m.square()) throw std::invalid_argument("sym_det: matrix is not square");
  const std::size_t n = m.rows();
  if (n > bound || n > 20)
    throw budget_exceeded("sym_det: size exceeds configured bound");
  if (n == 0) return Poly(1);

  // level[mask] = det of rows (n - popcount(mask) .. n-1) restricted to the
  // columns in mask.
  std::unordered_map<std::uint32_t, Poly> level;
  for (std::size_t c = 0; c < n; ++c)
    if (!m(n - 1, c).is_zero()) level.emplace(1u << c, m(n - 1, c));
  for (std::size_t row = n - 1; row-- > 0;) {
    std::unordered_map<std::uint32_t, Poly> next;
    for (const auto &[mask, minor] : level) {
      // Expand row `row` along every column not already used.
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t bit = 1u << c;
        if (mask & bit) continue;
        const Poly &entry = m(row, c);
        if (entry.is_zero()) continue;
        // Position of c among the columns of mask | bit.
        int pos = std::popcount(mask & (bit - 1));
        Poly term = entry * minor;
        if (pos & 1) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, std::move(term));
        if (!inserted) it->second += term;
      }
    }
    level = std::move(next);
  }
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  auto it = level.find(full);
  return it == level.end() ? Poly() : it->second;
}

/// Substitutes rational values into every entry.
inline DenseMatrix<Rat> evaluate(const PolyMatrix &m,
                                 const std::map<VarId, Rat> &values) {
  return map_entries(m, [&](const Poly &p) { return p.evaluate(values); });
}

inline PolyMatrix to_poly_matrix(const DenseMatrix<Rat> &m) {
  return map_entries(m, [](const Rat &r) { return Poly(r); });
}

} // namespace nplab

#endif // NPLAB_POLY_HPP
