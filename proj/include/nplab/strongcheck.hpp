#ifndef NPLAB_STRONGCHECK_HPP
#define NPLAB_STRONGCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "plucker.hpp"
#include "words.hpp"

namespace nplab {

struct StrongLimits {
  std::size_t max_m = 4;
  std::size_t max_monomials = 10'000'000;
};

/// Outcome of the strong nonplanarity test. When the Plücker image spans
/// everything, rank == c and there is no witness. Otherwise
/// `kernel_basis` is the reduced echelon basis of all functionals on the
/// coordinates (enumerate_D order) that vanish identically on the image,
/// and `witness` is its last row: the annihilating functional whose support
/// starts as late as possible, i.e. lives on the largest minors. Its leading
/// entry is 1.
struct StrongVerdict {
  bool is_strongly_nonplanar = false;
  std::size_t rank = 0;
  std::size_t c = 0;
  std::size_t monomial_count = 0;
  std::optional<RatVector> witness;
  std::vector<RatVector> kernel_basis;
  std::vector<MinorIndex> index;
};

inline StrongVerdict check_strong(const WordSystem &ws,
                                  const StrongLimits &limits = {}) {
  ws.validate();
  if (ws.m > limits.max_m)
    throw budget_exceeded("check_strong: m = " + std::to_string(ws.m) +
                          " exceeds cap " + std::to_string(limits.max_m));
  PolyMatrix b = build_psi(ws);
  PluckerVector pv = plucker_embed(b, PluckerLimits{limits.max_monomials});
  CoefficientMatrix cm = coefficient_matrix_by_coordinate(pv);
  if (cm.monomials.size() > limits.max_monomials)
    throw budget_exceeded("check_strong: monomial count exceeds cap");

  // Rows are coordinates, so the left kernel is exactly the set of linear
  // functionals annihilating every coefficient vector v_F.
  KernelResult kr = rank_and_left_kernel(cm.matrix);

  StrongVerdict v;
  v.c = pv.size();
  v.rank = kr.rank;
  v.monomial_count = cm.monomials.size();
  v.is_strongly_nonplanar = v.rank == v.c;
  v.index = std::move(pv.index);
  if (!kr.basis.empty()) {
    RatMatrix k = row_space_basis(RatMatrix::from_dense(kr.basis));
    for (std::size_t i = 0; i < k.rows(); ++i) {
      RatVector row(v.c);
      for (const auto &[j, x] : k.row(i)) row[j] = x;
      v.kernel_basis.push_back(std::move(row));
    }
    v.witness = v.kernel_basis.back();
  }
  return v;
}

/// sum_d w_d C_d as a polynomial; zero iff w annihilates the image.
inline Poly apply_functional(const RatVector &w, const PluckerVector &pv) {
  if (w.size() != pv.size())
    throw std::invalid_argument("apply_functional: length mismatch");
  Poly total;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) total += pv.coords[j].scaled(w[j]);
  return total;
}

struct AbelianizationReport {
  bool strongly_nonplanar = false;
  bool distinct_abelianizations = false;
  bool consistent = false;
  StrongVerdict verdict;
};

/// Runs the rank test and compares it with the abelianization criterion.
inline AbelianizationReport check_strong_with_abelianization(const WordSystem &ws,
                                            const StrongLimits &limits = {}) {
  AbelianizationReport r;
  r.verdict = check_strong(ws, limits);
  r.strongly_nonplanar = r.verdict.is_strongly_nonplanar;
  r.distinct_abelianizations = distinct_abelianizations(ws);
  r.consistent = r.strongly_nonplanar == r.distinct_abelianizations;
  return r;
}

} // namespace nplab

#endif // NPLAB_STRONGCHECK_HPP
