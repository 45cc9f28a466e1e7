#include <gtest/gtest.h>

#include <umbral/fourier.hpp>
#include <umbral/transform.hpp>

#include "oracles.hpp"

namespace umbral {
namespace {

using testing::RationalGen;

TEST(FourierStep, Examples) {
  const std::vector<Rational> one{1};
  const FourierSeq exp_coeffs = fourier_step({1, {1}, 0}, one, 12);
  for (unsigned long n = 0; n <= 12; ++n) EXPECT_EQ(exp_coeffs[n], Rational(1) / Rational(factorial(n)));

  const FourierSeq sq = fourier_step({1, {0, 1}, 0}, one, 30);
  EXPECT_EQ(sq, FourierSeq(std::vector<Rational>(31, Rational(1))));

  const std::vector<Rational> zero{0, 0};
  EXPECT_EQ(fourier_step({2, {0, 0, 0}, 0}, zero, 9), FourierSeq::zeros(10));
}

TEST(FourierStep, ConstantTermOnlyAtOrigin) {
  // z' = 1: zeta = (c, 1, 0, 0, ...)
  const std::vector<Rational> init{Rational(2, 5)};
  EXPECT_EQ(fourier_step({1, {0}, 1}, init, 5), (FourierSeq{Rational(2, 5), 1, 0, 0, 0, 0}));
}

TEST(FourierStep, LinearCaseIsScalarRecurrence) {
  // z'' = a z: (n+2)(n+1) zeta_{n+2} = a zeta_n
  const Rational a(-4, 3);
  const std::vector<Rational> init{Rational(1, 2), 3};
  const FourierSeq zeta = fourier_step({2, {a}, 0}, init, 20);
  for (std::size_t n = 0; n + 2 <= 20; ++n) EXPECT_EQ(Rational((n + 2) * (n + 1)) * zeta[n + 2], a * zeta[n]);
}

TEST(ConvolutionPower, Examples) {
  const std::vector<Rational> zeta{1, 2, 3, 4};
  EXPECT_EQ(convolution_power_at(zeta, 1, 3), 4);
  EXPECT_EQ(convolution_power_at(zeta, 2, 2), 1 * 3 + 2 * 2 + 3 * 1);
  EXPECT_EQ(convolution_power_at(zeta, 3, 1), 6);
}

TEST(FourierStep, MatchesLatticeStepping) {
  RationalGen gen(41);
  const std::vector<ConstNonlinearOde> eqs{
      {1, {0, 1}, 0},
      {1, {Rational(1, 2), -1, Rational(1, 3)}, 2},
      {2, {-1, 0, 1}, Rational(-1, 4)},
      {3, {1, 1}, 1},
  };
  for (const auto& eq : eqs) {
    const std::vector<Rational> zeta_init = gen.vector(eq.deriv_order, 4, 3);
    const std::size_t last = eq.deriv_order == 1 ? 30 : 22;
    const FourierSeq zeta = fourier_step(eq, zeta_init, last);
    const LatticeSeq z = forward_transform(zeta);
    const std::vector<Rational> init(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(eq.deriv_order));
    EXPECT_EQ(z, nonlin_step(eq.to_nonlinear(), init, last));
  }
}

TEST(FourierSolution, Examples) {
  const Rational c(-7, 2);
  EXPECT_EQ(fourier_solution(TaylorCoeffs{c, 0, 0}, 0), c);
  EXPECT_EQ(fourier_solution(TaylorCoeffs{Rational(3), Rational(5, 4)}, 1), Rational(5, 4));
}

TEST(FourierSolution, CollapsesToTaylorCoefficient) {
  RationalGen gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    const TaylorCoeffs b(gen.vector(21));
    for (std::size_t n = 0; n <= 20; ++n) ASSERT_EQ(fourier_solution(b, n), b[n]);
  }
}

}  // namespace
}  // namespace umbral
