#ifndef NPLAB_WEAKCHECK_HPP
#define NPLAB_WEAKCHECK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "poly.hpp"

namespace nplab {

/// Polynomial map f : R^k -> M_{m,n}, entries in x1..xk.
struct Parameterization {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  PolyMatrix entries;

  void validate() const {
    if (m == 0 || n == 0)
      throw std::invalid_argument("Parameterization: m and n must be >= 1");
    if (entries.rows() != m || entries.cols() != n)
      throw std::invalid_argument("Parameterization: entries must be m x n");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto &v : entries(i, j).variables())
          if (v.kind != VarKind::Param || v.i > k)
            throw std::invalid_argument(
                "Parameterization: entries may only use x1..x" +
                std::to_string(k));
  }
};

struct WeakLimits {
  std::size_t max_unknowns = 64;
  GroebnerLimits groebner{};
};

/// The n x m matrix of unknowns a[i,j] and the n x n matrix b[i,j].
inline PolyMatrix unknown_a(std::size_t n, std::size_t m) {
  PolyMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = Poly::var(VarId::coef_a(static_cast<unsigned>(i + 1),
                                        static_cast<unsigned>(j + 1)));
  return a;
}

inline PolyMatrix unknown_b(std::size_t n) {
  PolyMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = Poly::var(VarId::coef_b(static_cast<unsigned>(i + 1),
                                        static_cast<unsigned>(j + 1)));
  return b;
}

/// All a[i,j] then all b[i,j], row-major.
inline std::vector<VarId> unknowns(const Parameterization &f) {
  std::vector<VarId> out;
  for (std::size_t i = 1; i <= f.n; ++i)
    for (std::size_t j = 1; j <= f.m; ++j)
      out.push_back(VarId::coef_a(static_cast<unsigned>(i), static_cast<unsigned>(j)));
  for (std::size_t i = 1; i <= f.n; ++i)
    for (std::size_t j = 1; j <= f.n; ++j)
      out.push_back(VarId::coef_b(static_cast<unsigned>(i), static_cast<unsigned>(j)));
  return out;
}

/// Splits p into its coefficients with respect to the parameter monomials:
/// p = sum_mu coeff_mu(a, b) * x^mu.
inline std::map<Monomial, Poly> split_by_params(const Poly &p) {
  std::map<Monomial, Poly> out;
  for (const auto &[mono, c] : p.terms()) {
    Monomial xs, rest;
    for (const auto &[v, e] : mono) {
      if (v.kind == VarKind::Param)
        xs.add(v, e);
      else
        rest.add(v, e);
    }
    out[xs].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Generators of the ideal whose zero set is {(A, B) : det(A f(x) + B) == 0
/// identically in x}: the x-monomial coefficients of the determinant.
inline std::vector<Poly> coefficient_ideal(const Parameterization &f,
                                           const WeakLimits &limits = {}) {
  f.validate();
  if (f.n * (f.m + f.n) > limits.max_unknowns)
    throw budget_exceeded("coefficient_ideal: too many unknowns");
  PolyMatrix y = matadd(matmul(unknown_a(f.n, f.m), f.entries), unknown_b(f.n));
  Poly det = sym_det(y, std::max<std::size_t>(kDefaultDetBound, f.n));
  std::vector<Poly> gens;
  for (auto &[xs, coeff] : split_by_params(det)) gens.push_back(std::move(coeff));
  return gens;
}

enum class WeakStatus {
  /// No nonzero complex (A, B) makes det(A f(x) + B) vanish identically.
  WeaklyNonplanarComplex,
  /// Some nonzero complex (A, B) exists. Says nothing about real (A, B).
  ComplexSolutionExists,
};

inline std::string to_string(WeakStatus s) {
  return s == WeakStatus::WeaklyNonplanarComplex ? "weakly_nonplanar_complex"
                                                 : "complex_solution_exists";
}

struct WeakVerdict {
  WeakStatus status = WeakStatus::WeaklyNonplanarComplex;
  /// First unknown that is not in the radical of the coefficient ideal.
  std::optional<VarId> free_variable;
  std::vector<Poly> ideal;
  /// Radical membership per unknown, in unknowns() order.
  std::vector<std::pair<VarId, bool>> membership;
};

/// Every unknown lies in the radical iff the only common zero is A = B = 0.
inline WeakVerdict check_weak_complex(const Parameterization &f,
                                      const WeakLimits &limits = {}) {
  WeakVerdict v;
  v.ideal = coefficient_ideal(f, limits);
  for (const auto &u : unknowns(f)) {
    bool in = radical_member(u, v.ideal, limits.groebner);
    v.membership.emplace_back(u, in);
    if (!in && !v.free_variable) {
      v.free_variable = u;
      v.status = WeakStatus::ComplexSolutionExists;
    }
  }
  return v;
}

/// Complex matrix as real and imaginary parts.
struct ComplexRatMatrix {
  DenseMatrix<Rat> re;
  DenseMatrix<Rat> im;
};

/// Reduces modulo I^2 + 1.
inline Poly reduce_imaginary(const Poly &p) {
  Poly out;
  const VarId unit = VarId::imag();
  for (const auto &[mono, c] : p.terms()) {
    auto e = mono.count(unit);
    Monomial rest = mono;
    if (e) rest.remove(unit, e);
    if (e % 2) rest.add(unit, 1);
    out.add_term(rest, (e / 2) % 2 ? Rat(-c) : c);
  }
  return out;
}

/// det(A f(x) + B) reduced by I^2 + 1, with A = A.re + I A.im and likewise B.
inline Poly complex_determinant(const Parameterization &f, const ComplexRatMatrix &a,
                                const ComplexRatMatrix &b) {
  f.validate();
  auto shape_ok = [](const ComplexRatMatrix &z, std::size_t r, std::size_t c) {
    return z.re.rows() == r && z.re.cols() == c && z.im.rows() == r &&
           z.im.cols() == c;
  };
  if (!shape_ok(a, f.n, f.m) || !shape_ok(b, f.n, f.n))
    throw std::invalid_argument("verify_complex_witness: shape mismatch");
  const Poly unit = Poly::var(VarId::imag());
  auto lift = [&](const ComplexRatMatrix &z) {
    PolyMatrix out(z.re.rows(), z.re.cols());
    for (std::size_t i = 0; i < z.re.rows(); ++i)
      for (std::size_t j = 0; j < z.re.cols(); ++j)
        out(i, j) = Poly(z.re(i, j)) + unit * Poly(z.im(i, j));
    return out;
  };
  PolyMatrix y = matadd(matmul(lift(a), f.entries), lift(b));
  return reduce_imaginary(sym_det(y, std::max<std::size_t>(kDefaultDetBound, f.n)));
}

/// True iff det(A f(x) + B) is the zero polynomial. Callers must separately
/// require (A, B) != 0.
inline bool verify_complex_witness(const Parameterization &f,
                                   const ComplexRatMatrix &a,
                                   const ComplexRatMatrix &b) {
  return complex_determinant(f, a, b).is_zero();
}

} // namespace nplab

#endif // NPLAB_WEAKCHECK_HPP
