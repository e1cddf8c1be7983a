#include <gtest/gtest.h>

#include <nplab/poly_parse.hpp>
#include <nplab/weakcheck.hpp>

using namespace nplab;

namespace {

Parameterization param(std::size_t k, std::size_t m, std::size_t n,
                       std::vector<std::vector<std::string>> entries) {
  Parameterization f{k, m, n, PolyMatrix(m, n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) f.entries(i, j) = parse_poly(entries[i][j]);
  return f;
}

Parameterization rotation() { return param(2, 2, 2, {{"x1", "x2"}, {"-x2", "x1"}}); }

DenseMatrix<Rat> rat2(long a, long b, long c, long d) {
  DenseMatrix<Rat> m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

} // namespace

TEST(WeakCheck, CoefficientIdeal) {
  auto a = Poly::var(VarId::coef_a(1, 1)), b = Poly::var(VarId::coef_b(1, 1));
  auto gens = coefficient_ideal(param(1, 1, 1, {{"x1"}}));
  EXPECT_EQ(gens.size(), 2u);
  EXPECT_NE(std::find(gens.begin(), gens.end(), a), gens.end());
  EXPECT_NE(std::find(gens.begin(), gens.end(), b), gens.end());
  EXPECT_EQ(coefficient_ideal(param(1, 1, 1, {{"0"}})), (std::vector<Poly>{b}));
  EXPECT_EQ(unknowns(rotation()).size(), 8u);
}

TEST(WeakCheck, Identity) {
  auto v = check_weak_complex(param(1, 1, 1, {{"x1"}}));
  EXPECT_EQ(v.status, WeakStatus::WeaklyNonplanarComplex);
  EXPECT_FALSE(v.free_variable);
}

TEST(WeakCheck, ZeroMap) {
  auto v = check_weak_complex(param(1, 1, 1, {{"0"}}));
  EXPECT_EQ(v.status, WeakStatus::ComplexSolutionExists);
  ASSERT_TRUE(v.free_variable);
  EXPECT_EQ(*v.free_variable, VarId::coef_a(1, 1));
}

TEST(WeakCheck, Rotation) {
  auto v = check_weak_complex(rotation());
  EXPECT_EQ(v.status, WeakStatus::ComplexSolutionExists);
  EXPECT_EQ(to_string(v.status), "complex_solution_exists");
}

TEST(WeakCheck, RepeatedColumns) {
  // Two equal columns: A f(x) has rank one for every x.
  auto v = check_weak_complex(param(2, 1, 2, {{"x1*x2", "x1*x2"}}));
  EXPECT_EQ(v.membership.size(), 6u);
  EXPECT_EQ(v.status, WeakStatus::ComplexSolutionExists);
}

TEST(WeakCheck, ComplexWitness) {
  auto f = rotation();
  ComplexRatMatrix a{rat2(1, 0, 0, 0), rat2(0, 1, 0, 0)};
  ComplexRatMatrix b{rat2(0, 0, 1, 0), rat2(0, 0, 0, 1)};
  EXPECT_TRUE(verify_complex_witness(f, a, b));

  auto id = param(1, 1, 1, {{"x1"}});
  DenseMatrix<Rat> one(1, 1, Rat(1)), zero(1, 1);
  EXPECT_FALSE(verify_complex_witness(id, {one, zero}, {zero, zero}));
  EXPECT_TRUE(verify_complex_witness(id, {zero, zero}, {zero, zero}));

  // Real part only is not a witness.
  ComplexRatMatrix a_re{rat2(1, 0, 0, 0), rat2(0, 0, 0, 0)};
  ComplexRatMatrix b_re{rat2(0, 0, 1, 0), rat2(0, 0, 0, 0)};
  EXPECT_FALSE(verify_complex_witness(f, a_re, b_re));
}

TEST(WeakCheck, ImaginaryReduction) {
  Poly i = Poly::var(VarId::imag());
  EXPECT_EQ(reduce_imaginary(i * i), Poly(-1));
  EXPECT_EQ(reduce_imaginary(i.pow(3)), -i);
  EXPECT_EQ(reduce_imaginary(i.pow(4)), Poly(1));
}

TEST(WeakCheck, Validation) {
  auto f = param(1, 1, 1, {{"x2"}});
  EXPECT_THROW(check_weak_complex(f), std::invalid_argument);
  WeakLimits tight;
  tight.max_unknowns = 4;
  EXPECT_THROW(check_weak_complex(rotation(), tight), budget_exceeded);
}

TEST(WeakCheckProperty, RoutesAgreeOnRotation) {
  auto gens = coefficient_ideal(rotation());
  for (const auto &u : unknowns(rotation()))
    EXPECT_EQ(radical_member(u, gens), radical_member_elimination(u, gens)) << u;
}
