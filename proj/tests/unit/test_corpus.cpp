#include <gtest/gtest.h>

#include <umbral/corpus.hpp>
#include <umbral/error.hpp>
#include <umbral/transform.hpp>

namespace umbral::corpus {
namespace {

LatticeSeq mapped(const CorpusCase& c, std::size_t index, std::size_t last) {
  return taylor_to_lattice(c.solutions.at(index).taylor(last), last);
}

TEST(Corpus, DefaultCorpusPasses) {
  const auto cases = default_corpus();
  EXPECT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    const CaseReport report = verify_case(c);
    EXPECT_TRUE(report.passed) << c.name;
    EXPECT_FALSE(report.checks.empty()) << c.name;
    for (const auto& check : report.checks) {
      EXPECT_EQ(check.residuals.size(), c.verify_last + 1) << c.name << " " << check.label;
      for (const auto& r : check.residuals) EXPECT_EQ(r, 0) << c.name << " " << check.label;
    }
  }
}

TEST(Corpus, HarmonicStencilAndSolutions) {
  const CorpusCase c = harmonic_case(1);
  const auto& eq = std::get<LinearOde>(c.eq);
  const AffineForm form = lin_stencil(eq, 0);
  EXPECT_EQ(form.coeffs, (std::vector<Rational>{2, -2, 1}));
  EXPECT_EQ(mapped(c, 0, 8), (LatticeSeq{0, 1, 2, 2, 0, -4, -8, -8, 0}));
  EXPECT_EQ(mapped(c, 1, 8), (LatticeSeq{1, 1, 0, -2, -4, -4, 0, 8, 16}));
}

TEST(Corpus, DampedClosedStencil) {
  for (const auto& [omega, q] : std::vector<std::pair<Rational, Rational>>{{1, Rational(1, 2)}, {Rational(3, 2), Rational(1, 4)}}) {
    const AffineForm form = lin_stencil(std::get<LinearOde>(damped_case(omega, q).eq), 4);
    EXPECT_EQ(form.coeffs[4], omega * omega - 2 * q * omega + 1);
    EXPECT_EQ(form.coeffs[5], 2 * (q * omega - 1));
    EXPECT_EQ(form.coeffs[6], 1);
  }
  EXPECT_EQ(mapped(damped_case(1, Rational(1, 2)), 0, 7), (LatticeSeq{0, 1, 1, 0, -1, -1, 0, 1}));
}

TEST(Corpus, Degenerations) {
  const Rational omega(2, 3);
  const CorpusCase d = damped_case(omega, 0);
  const CorpusCase h = harmonic_case(omega);
  EXPECT_EQ(std::get<LinearOde>(d.eq), std::get<LinearOde>(h.eq));
  // the damped case is normalized to z'(0) = 1, the harmonic one is sin(omega t)
  const LatticeSeq d0 = mapped(d, 0, 12);
  const LatticeSeq h0 = mapped(h, 0, 12);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(omega * d0[n], h0[n]);
  EXPECT_EQ(mapped(d, 1, 12), mapped(h, 1, 12));

  // k = 0 Riccati: z' = z^2 with -1/(1 + c1)... normalized c1 = -1 gives 1/(1 - t)
  const CorpusCase r = riccati_case(0, -1, 0);
  EXPECT_EQ(mapped(r, 0, 5), (LatticeSeq{1, 2, 5, 16, 65, 326}));

  // omega = 0: z'' = 0; the damped normalization keeps t, the cosine becomes 1
  const CorpusCase free = damped_case(0, 0);
  EXPECT_TRUE(verify_case(free).passed);
  EXPECT_EQ(mapped(free, 0, 4), (LatticeSeq{0, 1, 2, 3, 4}));
  EXPECT_EQ(mapped(free, 1, 4), (LatticeSeq{1, 1, 1, 1, 1}));
}

TEST(Corpus, DampedOverdampedRejected) {
  try {
    damped_case(1, Rational(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constraint_violation);
  }
}

TEST(Corpus, Gaussian) {
  const CorpusCase c = gaussian_case();
  const LatticeSeq z = mapped(c, 0, 20);
  EXPECT_EQ(z.prefix(3), (LatticeSeq{1, 1, 0}));
  const FourierSeq zeta = inverse_transform(z);
  for (std::size_t k = 1; k <= 20; k += 2) EXPECT_EQ(zeta[k], 0);
  EXPECT_EQ(zeta[2], Rational(-1, 2));
}

TEST(Corpus, GaussSum) {
  const Rational a(1, 2), b(1, 3), c(5, 4);
  EXPECT_EQ(gauss_sum(0, a, b, c), 1);
  EXPECT_EQ(gauss_sum(1, a, b, c), 1 + a * b / c);
  const std::vector<Rational> expected{1, Rational(17, 15), Rational(187, 135), Rational(10363, 5265),
                                       Rational(987947, 268515)};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(gauss_sum(n, a, b, c), expected[n]);
  const CorpusCase hc = hypergeometric_case(a, b, c);
  EXPECT_FALSE(hc.steppable);
  EXPECT_TRUE(verify_case(hc).passed);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(mapped(hc, 0, 6)[n], gauss_sum(n, a, b, c));
}

TEST(Corpus, GaussSumPole) {
  try {
    gauss_sum(3, 1, 1, -2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::pochhammer_pole);
  }
  EXPECT_NO_THROW(gauss_sum(2, 1, 1, -2));
}

TEST(Corpus, Riccati) {
  EXPECT_EQ(mapped(riccati_case(1, -2, 0), 0, 8), (LatticeSeq{1, 1, 2, 4, 13, 41, 196, 862, 5489}));
  EXPECT_EQ(mapped(riccati_case(2, Rational(3, 2), Rational(1, 4)), 0, 6),
            (LatticeSeq{Rational(-3, 2), Rational(-3, 2), Rational(-3, 2), 3, Rational(33, 2), Rational(87, 2),
                        Rational(-363, 2)}));
  try {
    riccati_case(1, 2, -2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_at_origin);
  }
}

TEST(Corpus, Hermite) {
  EXPECT_EQ(hermite_polynomial(2), (Polynomial{-1, 0, 1}));
  EXPECT_EQ(hermite_polynomial(3), (Polynomial{0, -3, 0, 1}));
  EXPECT_EQ(mapped(hermite_case(2), 0, 6), (LatticeSeq{-1, -1, 1, 5, 11, 19, 29}));
  EXPECT_EQ(mapped(hermite_case(3), 0, 6), (LatticeSeq{0, -3, -6, -3, 12, 45, 102}));
  EXPECT_EQ(mapped(hermite_case(0), 0, 3), (LatticeSeq{1, 1, 1, 1}));
  CorpusCase c = hermite_case(3);
  c.verify_last = 15;
  EXPECT_TRUE(verify_case(c).passed);
}

TEST(Corpus, Jacobi) {
  const Rational alpha(1, 2), beta(-1, 3);
  EXPECT_EQ(mapped(jacobi_case(1, alpha, beta), 0, 5),
            (LatticeSeq{Rational(5, 12), Rational(3, 2), Rational(31, 12), Rational(11, 3), Rational(19, 4),
                        Rational(35, 6)}));
  EXPECT_EQ(mapped(jacobi_case(2, alpha, beta), 0, 5),
            (LatticeSeq{Rational(-125, 288), Rational(65, 288), Rational(1205, 288), Rational(3295, 288),
                        Rational(6335, 288), Rational(10325, 288)}));
  EXPECT_EQ(mapped(jacobi_case(0, alpha, beta), 0, 3), (LatticeSeq{1, 1, 1, 1}));
  EXPECT_THROW(jacobi_polynomial(2, -1, 0), Error);
}

TEST(Corpus, JacobiComparisonIsReported) {
  const JacobiComparison cmp = compare_jacobi(2, Rational(1, 2), Rational(-1, 3), 10);
  EXPECT_EQ(cmp.termwise.size(), 11u);
  EXPECT_EQ(cmp.alternate.size(), 11u);
  EXPECT_EQ(cmp.values_agree, cmp.termwise == cmp.alternate);
}

TEST(Corpus, TaylorFromPolynomial) {
  EXPECT_EQ(taylor_from_polynomial(Polynomial{1, 2}, 3), (TaylorCoeffs{1, 2, 0, 0}));
}

}  // namespace
}  // namespace umbral::corpus
