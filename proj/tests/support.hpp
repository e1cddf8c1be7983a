#ifndef NPLAB_TESTS_SUPPORT_HPP
#define NPLAB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include <nplab/linalg.hpp>
#include <nplab/poly.hpp>

namespace nplab::gen {

inline Rat small_rat(std::mt19937_64 &rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 3);
  return make_rat(num(rng), den(rng));
}

inline RatMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows,
                               std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<RatVector> dense(rows, RatVector(cols));
  for (auto &row : dense)
    for (auto &x : row)
      if (keep(rng)) x = small_rat(rng);
  return RatMatrix::from_dense(dense);
}

/// Random polynomial in x1..x_vars with at most `terms` terms of degree
/// at most `deg`.
inline Poly random_poly(std::mt19937_64 &rng, unsigned vars, unsigned deg,
                        unsigned terms) {
  std::uniform_int_distribution<unsigned> e(0, deg);
  Poly p;
  for (unsigned k = 0; k < terms; ++k) {
    Monomial mono;
    unsigned left = deg;
    for (unsigned v = 1; v <= vars && left > 0; ++v) {
      unsigned x = std::min(left, e(rng));
      mono.add(VarId::param(v), x);
      left -= x;
    }
    p.add_term(mono, small_rat(rng));
  }
  return p;
}

} // namespace nplab::gen

#endif
