#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "umbral/discretize.hpp"
#include "umbral/galois.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/sequence.hpp"

namespace umbral::corpus {

using Equation = std::variant<LinearOde, NonlinearOde, ConstLinearEq>;

struct KnownSolution {
  std::string label;
  /// Taylor coefficients b_0..b_last of the continuous solution.
  std::function<TaylorCoeffs(std::size_t last)> taylor;
};

struct CorpusCase {
  std::string name;
  Equation eq;
  std::vector<KnownSolution> solutions;
  std::vector<std::pair<std::string, Rational>> parameters;
  /// Residuals are checked for n = 0..verify_last.
  std::size_t verify_last = 20;
  /// Whether forward stepping is defined (leading coefficient nonzero at t = 0).
  bool steppable = true;
};

struct SolutionCheck {
  std::string label;
  std::vector<Rational> residuals;
  bool passed = false;
};

struct CaseReport {
  std::string name;
  std::vector<SolutionCheck> checks;
  std::vector<std::string> notes;
  bool passed = false;
};

/// Maps every known solution to the lattice and evaluates the residual of
/// the discrete equation over the case's verification range.
CaseReport verify_case(const CorpusCase& c);

/// Zero-padded Taylor coefficients of a polynomial.
TaylorCoeffs taylor_from_polynomial(const Polynomial& p, std::size_t last);

/// z'' + omega^2 z = 0 with the sine and cosine solutions.
CorpusCase harmonic_case(const Rational& omega);

/// z'' + 2 q omega z' + omega^2 z = 0, q <= 1. Solutions with (z, z') = (0, 1)
/// and (1, 0) at t = 0.
CorpusCase damped_case(const Rational& omega, const Rational& q);

/// z' + t z = 0, solved by exp(-t^2/2).
CorpusCase gaussian_case();

/// sum_{k<=n} (a)_k (b)_k / ((c)_k k!) (n)_k, the lattice image of 2F1(a, b; c; t).
/// Throws PochhammerPole when (c)_k vanishes for some k <= n.
Rational gauss_sum(std::size_t n, const Rational& a, const Rational& b, const Rational& c);

/// t(1-t) z'' + (c - (a+b+1) t) z' - ab z = 0 with the 2F1 solution at the
/// origin. Verification only: the leading coefficient vanishes at t = 0.
CorpusCase hypergeometric_case(const Rational& a, const Rational& b, const Rational& c);

/// z' = t^k z^2 with the solution -(k+1)/(t^{k+1} + c1 + k c2).
/// Throws SingularAtOrigin when c1 + k c2 = 0.
CorpusCase riccati_case(std::size_t k, const Rational& c1, const Rational& c2);

/// Probabilists' Hermite polynomial He_m.
Polynomial hermite_polynomial(std::size_t m);

/// z'' - t z' + m z = 0 with He_m as solution.
CorpusCase hermite_case(std::size_t m);

/// Classical Jacobi polynomial P_m^{(alpha,beta)} expanded in powers of t.
/// Throws GammaPole when a Gamma argument of the finite sum is a
/// nonpositive integer.
Polynomial jacobi_polynomial(std::size_t m, const Rational& alpha, const Rational& beta);

/// (1-t^2) z'' + (beta - alpha - (alpha+beta+2) t) z' + m(m+alpha+beta+1) z = 0
/// with the termwise lattice image of P_m^{(alpha,beta)} as solution.
CorpusCase jacobi_case(std::size_t m, const Rational& alpha, const Rational& beta);

/// The closed form sum_k C(m,k) (alpha+beta+m+1)_k / m! (1/2)^k (n-1)_k, i.e.
/// the Gamma-ratio formula with (t-1)^k mapped to the falling factorial
/// (n-1)_k. Evaluated for comparison only.
Rational jacobi_alternate_formula(std::size_t n, std::size_t m, const Rational& alpha, const Rational& beta);

struct JacobiComparison {
  std::vector<Rational> termwise;   ///< lattice image of the expanded polynomial
  std::vector<Rational> alternate;  ///< jacobi_alternate_formula values
  bool values_agree = false;
  bool alternate_solves = false;    ///< alternate values give zero residual
};

JacobiComparison compare_jacobi(std::size_t m, const Rational& alpha, const Rational& beta, std::size_t last);

/// The default verification corpus covering every example family.
std::vector<CorpusCase> default_corpus();

}  // namespace umbral::corpus
