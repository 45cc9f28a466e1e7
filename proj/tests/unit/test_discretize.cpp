#include <gtest/gtest.h>

#include <umbral/discretize.hpp>
#include <umbral/error.hpp>
#include <umbral/transform.hpp>

#include "oracles.hpp"

namespace umbral {
namespace {

using testing::RationalGen;

LinearOde harmonic(const Rational& omega) {
  return {2, {PolyCoeff::constant(omega * omega), PolyCoeff{}, PolyCoeff::constant(1)}, PolyCoeff{}};
}

LinearOde damped(const Rational& omega, const Rational& q) {
  return {2, {PolyCoeff::constant(omega * omega), PolyCoeff::constant(2 * q * omega), PolyCoeff::constant(1)}, {}};
}

LinearOde gaussian() { return {1, {PolyCoeff{{1, 1}}, PolyCoeff::constant(1)}, {}}; }

LinearOde hermite(long m) {
  return {2, {PolyCoeff::constant(m), PolyCoeff{{1, -1}}, PolyCoeff::constant(1)}, {}};
}

NonlinearOde square() { return {1, {PolyCoeff{}, PolyCoeff{}, PolyCoeff::constant(1)}}; }

// Taylor coefficients of a solution of sum_j a_j(t) z^{(j)} + c0(t) = 0 by
// matching powers of t, given b_0..b_{N-1}. Independent of the lattice code.
std::vector<Rational> power_series_solve(const LinearOde& eq, std::vector<Rational> b, std::size_t last) {
  using testing::fact;
  const std::size_t order = eq.order;
  b.resize(last + 1);
  const Rational lead = eq.coeffs[order].constant_term();
  for (std::size_t n = 0; n + order <= last; ++n) {
    Rational rest;
    for (const auto& t : eq.c0.terms())
      if (t.power == n) rest += t.coeff;
    for (std::size_t j = 0; j <= order; ++j) {
      for (const auto& t : eq.coeffs[j].terms()) {
        if (t.power > n || (j == order && t.power == 0)) continue;
        const std::size_t k = n - t.power;
        rest += t.coeff * testing::ratio(fact(k + j), fact(k)) * b[k + j];
      }
    }
    b[n + order] = -rest / (lead * testing::ratio(fact(n + order), fact(n)));
  }
  return b;
}

LatticeSeq lattice_of(const std::vector<Rational>& b) {
  return taylor_to_lattice(TaylorCoeffs(b), b.size() - 1);
}

TEST(PolyCoeff, Normalizes) {
  const PolyCoeff p{{3, 2}, {0, 1}, {3, -2}, {1, 0}, {0, 4}};
  EXPECT_EQ(p.terms(), (std::vector<Monomial>{{0, 5}}));
  EXPECT_EQ(p.constant_term(), 5);
  EXPECT_TRUE(PolyCoeff({{2, 1}, {2, -1}}).is_zero());
  const PolyCoeff q{{2, 3}, {0, -1}};
  EXPECT_EQ(q.lattice_image(4), 3 * 12 - 1);
}

TEST(DeltaPower, Examples) {
  const LatticeSeq squares{0, 1, 4, 9, 16};
  EXPECT_EQ(delta_power(squares, 0), squares);
  EXPECT_EQ(delta_power(squares, 2), (LatticeSeq{2, 2, 2}));
  EXPECT_EQ(delta_power(LatticeSeq{1, 2, 4, 8, 16, 32}, 1), (LatticeSeq{1, 2, 4, 8, 16}));
  EXPECT_EQ(delta_power(squares, 4), (LatticeSeq{0}));
}

TEST(DeltaPower, MatchesRepeatedDifferences) {
  RationalGen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = gen.vector(gen.index(1, 12));
    const std::size_t l = gen.index(0, z.size() - 1);
    EXPECT_EQ(testing::to_vector(delta_power(LatticeSeq(z), l)), testing::naive_difference(z, l));
  }
}

TEST(DeltaPower, OrderTooLarge) {
  try {
    delta_power(LatticeSeq{1, 2, 3}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::order_too_large);
  }
}

TEST(LinResidual, HarmonicSine) {
  const LatticeSeq z{0, 1, 2, 2, 0, -4, -8, -8, 0};
  for (std::size_t n = 0; n + 2 < z.size(); ++n) EXPECT_EQ(lin_residual(harmonic(1), z, n), 0);
}

TEST(LinResidual, ZeroSequence) {
  const LatticeSeq z = LatticeSeq::zeros(10);
  for (std::size_t n = 0; n + 2 < z.size(); ++n) {
    EXPECT_EQ(lin_residual(hermite(3), z, n), 0);
    EXPECT_EQ(lin_residual(damped(Rational(2, 3), Rational(1, 5)), z, n), 0);
  }
}

TEST(LinResidual, Gaussian) {
  const LatticeSeq z = lattice_of(power_series_solve(gaussian(), {1}, 21));
  EXPECT_EQ(z.prefix(9), (LatticeSeq{1, 1, 0, -2, -2, 6, 16, -20, -132}));
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(lin_residual(gaussian(), z, n), 0) << "n=" << n;
}

TEST(LinResidual, InhomogeneousTerm) {
  // z' = t + 1 with z = t^2/2 + t
  const LinearOde eq{1, {PolyCoeff{}, PolyCoeff::constant(1)}, PolyCoeff{{0, -1}, {1, -1}}};
  const LatticeSeq z = lattice_of({0, 1, Rational(1, 2), 0, 0, 0, 0, 0, 0});
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(lin_residual(eq, z, n), 0);
  const LatticeSeq wrong = lattice_of({0, 1, 0, 0, 0, 0});
  EXPECT_NE(lin_residual(eq, wrong, 1), 0);
}

TEST(LinResidual, KernelFormMatchesShiftForm) {
  RationalGen gen(32);
  const LinearOde eq{2, {PolyCoeff{{0, 1}, {2, -3}}, PolyCoeff{{1, 2}}, PolyCoeff{{0, 1}, {1, Rational(1, 2)}}},
                     PolyCoeff{{3, 1}}};
  const LatticeSeq z(gen.vector(14));
  for (std::size_t n = 0; n + 2 < z.size(); ++n) {
    EXPECT_EQ(lin_residual(eq, z, n, MonomialForm::kernel), lin_residual(eq, z, n, MonomialForm::shift));
  }
}

TEST(LinResidual, IndexOutOfRange) {
  try {
    lin_residual(harmonic(1), LatticeSeq{0, 1, 2}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::index_out_of_range);
  }
}

TEST(NonlinResidual, SquareEquation) {
  std::vector<Rational> ones(14, Rational(1));
  const LatticeSeq z = lattice_of(ones);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(nonlin_residual(square(), z, n), 0);
    EXPECT_EQ(nonlin_residual(square(), z, n, StarPath::kernel), 0);
  }
}

TEST(NonlinResidual, ZeroEquation) {
  const NonlinearOde eq{2, {PolyCoeff{}, PolyCoeff{}}};
  EXPECT_EQ(nonlin_residual(eq, LatticeSeq::zeros(5), 2), 0);
}

TEST(NonlinResidual, RiccatiFirstPower) {
  // z' = t z^2 solved by -2/(t^2 - 2) = 1 + t^2/2 + t^4/4 + ...
  const NonlinearOde eq{1, {PolyCoeff{}, PolyCoeff{}, PolyCoeff{{1, 1}}}};
  std::vector<Rational> b(12);
  for (std::size_t k = 0; k < b.size(); k += 2) b[k] = pow(Rational(1, 2), k / 2);
  const LatticeSeq z = lattice_of(b);
  EXPECT_EQ(z.prefix(9), (LatticeSeq{1, 1, 2, 4, 13, 41, 196, 862, 5489}));
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(nonlin_residual(eq, z, n), 0) << "n=" << n;
}

TEST(LinStep, Harmonic) {
  const std::vector<Rational> init{0, 1};
  EXPECT_EQ(lin_step(harmonic(1), init, 8), (LatticeSeq{0, 1, 2, 2, 0, -4, -8, -8, 0}));
}

TEST(LinStep, DampedSatisfiesClosedRecurrence) {
  RationalGen gen(33);
  for (const auto& [omega, q] : std::vector<std::pair<Rational, Rational>>{
           {1, Rational(1, 2)}, {Rational(3, 2), Rational(1, 4)}, {Rational(2, 5), 1}, {2, 0}}) {
    const std::vector<Rational> init = gen.vector(2);
    const LatticeSeq z = lin_step(damped(omega, q), init, 15);
    for (std::size_t n = 0; n + 2 <= 15; ++n) {
      EXPECT_EQ(z[n + 2] + 2 * (q * omega - 1) * z[n + 1] + (omega * omega - 2 * q * omega + 1) * z[n], 0);
    }
  }
}

TEST(LinStep, HermiteReproducesPolynomial) {
  const std::vector<Rational> init{-1, -1};
  const LatticeSeq z = lin_step(hermite(2), init, 25);
  for (long n = 0; n <= 25; ++n) EXPECT_EQ(z[n], Rational(n * n - n - 1));
}

TEST(LinStep, TruncationCorrespondence) {
  RationalGen gen(34);
  const std::vector<LinearOde> eqs{
      harmonic(Rational(2, 3)), damped(Rational(3, 2), Rational(1, 4)), gaussian(), hermite(5),
      LinearOde{3, {PolyCoeff{{0, 1}, {2, -1}}, PolyCoeff{{1, 3}}, PolyCoeff{}, PolyCoeff{{0, 2}, {1, 1}}},
                PolyCoeff{{0, 1}, {4, Rational(-1, 7)}}}};
  for (const auto& eq : eqs) {
    const auto seed = gen.vector(eq.order);
    const auto b = power_series_solve(eq, seed, 18);
    const LatticeSeq image = lattice_of(b);
    const std::vector<Rational> init(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(eq.order));
    const LatticeSeq z = lin_step(eq, init, 18);
    EXPECT_EQ(z, image);
    EXPECT_EQ(inverse_transform(z), FourierSeq(b));
  }
}

TEST(LinStep, Errors) {
  const LinearOde singular{1, {PolyCoeff::constant(1), PolyCoeff{{1, 1}}}, {}};
  const std::vector<Rational> one{1};
  try {
    lin_step(singular, one, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_forward_solvable);
  }
  try {
    lin_step(harmonic(1), one, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constraint_violation);
  }
  const LinearOde no_lead{1, {PolyCoeff::constant(1), PolyCoeff{}}, {}};
  EXPECT_THROW(no_lead.validate(), Error);
}

TEST(NonlinStep, Examples) {
  const std::vector<Rational> one{1};
  EXPECT_EQ(nonlin_step(square(), one, 4), (LatticeSeq{1, 2, 5, 16, 65}));

  const Rational c(7, 3);
  const std::vector<Rational> init{c};
  const NonlinearOde zero{1, {PolyCoeff{}, PolyCoeff{}}};
  EXPECT_EQ(nonlin_step(zero, init, 6), LatticeSeq(std::vector<Rational>(7, c)));
}

TEST(NonlinStep, RiccatiMatchesMapping) {
  const NonlinearOde eq{1, {PolyCoeff{}, PolyCoeff{}, PolyCoeff{{1, 1}}}};
  std::vector<Rational> b(13);
  for (std::size_t k = 0; k < b.size(); k += 2) b[k] = pow(Rational(1, 2), k / 2);
  const std::vector<Rational> init{1};
  EXPECT_EQ(nonlin_step(eq, init, 12), lattice_of(b));
}

TEST(NonlinStep, KernelAndConvolutionAgree) {
  const NonlinearOde eq{2, {PolyCoeff{{1, 1}}, PolyCoeff{{0, -1}}, PolyCoeff{}, PolyCoeff{{2, Rational(1, 3)}}}};
  const std::vector<Rational> init{1, Rational(1, 2)};
  const LatticeSeq z = nonlin_step(eq, init, 10);
  for (std::size_t n = 0; n + 2 <= 10; ++n) {
    EXPECT_EQ(nonlin_residual(eq, z, n, StarPath::kernel), 0);
    EXPECT_EQ(nonlin_residual(eq, z, n, StarPath::convolution), 0);
  }
}

TEST(LinStencil, ClosedHarmonicStencil) {
  for (const Rational omega : {Rational(1), Rational(2, 3), Rational(0)}) {
    for (std::size_t n : {0u, 3u, 7u}) {
      const AffineForm form = lin_stencil(harmonic(omega), n);
      std::vector<Rational> expected(n + 3);
      expected[n] = omega * omega + 1;
      expected[n + 1] = -2;
      expected[n + 2] = 1;
      EXPECT_EQ(form.coeffs, expected);
      EXPECT_EQ(form.constant, 0);
    }
  }
}

TEST(LinStencil, EvaluatesToResidual) {
  RationalGen gen(35);
  const LinearOde eq{2, {PolyCoeff{{0, 1}, {2, -3}}, PolyCoeff{{1, 2}}, PolyCoeff::constant(1)}, PolyCoeff{{1, 5}}};
  const LatticeSeq z(gen.vector(12));
  for (std::size_t n = 0; n + 2 < 12; ++n) {
    const AffineForm form = lin_stencil(eq, n);
    Rational value = form.constant;
    for (std::size_t j = 0; j < form.coeffs.size(); ++j) value += form.coeffs[j] * z[j];
    EXPECT_EQ(value, lin_residual(eq, z, n));
  }
}

TEST(NonlinTerms, EvaluatesToResidual) {
  RationalGen gen(36);
  const NonlinearOde eq{1, {PolyCoeff{{0, 2}}, PolyCoeff{{1, -1}}, PolyCoeff{{0, 1}, {1, 3}}}};
  const LatticeSeq z(gen.vector(9));
  for (std::size_t n = 0; n + 1 < 9; ++n) EXPECT_EQ(evaluate(nonlin_terms(eq, n), z), nonlin_residual(eq, z, n));
  const LatticePolynomial at0 = nonlin_terms(square(), 0);
  EXPECT_EQ(at0, (LatticePolynomial{{{1}, 1}, {{0}, -1}, {{0, 0}, -1}}));
}

}  // namespace
}  // namespace umbral
