#include "umbral/corpus.hpp"

#include <string>

#include "umbral/error.hpp"
#include "umbral/series.hpp"
#include "umbral/transform.hpp"

namespace umbral::corpus {

namespace {

std::size_t equation_reach(const Equation& eq) {
  if (const auto* lin = std::get_if<LinearOde>(&eq)) return lin->order;
  if (const auto* non = std::get_if<NonlinearOde>(&eq)) return non->deriv_order;
  return std::get<ConstLinearEq>(eq).order;
}

Rational residual_at(const Equation& eq, const LatticeSeq& z, std::size_t n) {
  if (const auto* lin = std::get_if<LinearOde>(&eq)) return lin_residual(*lin, z, n);
  if (const auto* non = std::get_if<NonlinearOde>(&eq)) return nonlin_residual(*non, z, n);
  return apply_operator(std::get<ConstLinearEq>(eq), z, n);
}

LinearOde linear(std::size_t order, std::vector<PolyCoeff> coeffs) {
  LinearOde eq{order, std::move(coeffs), {}};
  eq.validate();
  return eq;
}

}  // namespace

CaseReport verify_case(const CorpusCase& c) {
  CaseReport report;
  report.name = c.name;
  report.passed = true;
  const std::size_t reach = equation_reach(c.eq);
  for (const auto& sol : c.solutions) {
    SolutionCheck check;
    check.label = sol.label;
    const LatticeSeq z = taylor_to_lattice(sol.taylor(c.verify_last + reach), c.verify_last + reach);
    check.passed = true;
    for (std::size_t n = 0; n <= c.verify_last; ++n) {
      check.residuals.push_back(residual_at(c.eq, z, n));
      if (check.residuals.back() != 0) check.passed = false;
    }
    report.passed = report.passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

TaylorCoeffs taylor_from_polynomial(const Polynomial& p, std::size_t last) {
  std::vector<Rational> b(last + 1);
  for (std::size_t k = 0; k <= last; ++k) b[k] = p.coeff(k);
  return TaylorCoeffs(std::move(b));
}

CorpusCase harmonic_case(const Rational& omega) {
  CorpusCase c;
  c.name = "harmonic(omega=" + to_string(omega) + ")";
  c.eq = linear(2, {PolyCoeff::constant(omega * omega), PolyCoeff{}, PolyCoeff::constant(1)});
  c.parameters = {{"omega", omega}};
  c.solutions.push_back({"sin(omega t)", [omega](std::size_t last) {
                           std::vector<Rational> b(last + 1);
                           for (std::size_t k = 1; k <= last; k += 2) {
                             b[k] = pow(omega, k) * recip_factorial(static_cast<long>(k));
                             if ((k / 2) % 2 == 1) b[k] = -b[k];
                           }
                           return TaylorCoeffs(std::move(b));
                         }});
  c.solutions.push_back({"cos(omega t)", [omega](std::size_t last) {
                           std::vector<Rational> b(last + 1);
                           for (std::size_t k = 0; k <= last; k += 2) {
                             b[k] = pow(omega, k) * recip_factorial(static_cast<long>(k));
                             if ((k / 2) % 2 == 1) b[k] = -b[k];
                           }
                           return TaylorCoeffs(std::move(b));
                         }});
  return c;
}

CorpusCase damped_case(const Rational& omega, const Rational& q) {
  if (q > 1) throw Error(ErrorCode::constraint_violation, "damped oscillator case needs q <= 1");
  CorpusCase c;
  c.name = "damped(omega=" + to_string(omega) + ", q=" + to_string(q) + ")";
  const Rational friction = 2 * q * omega;
  const Rational stiffness = omega * omega;
  c.eq = linear(2, {PolyCoeff::constant(stiffness), PolyCoeff::constant(friction), PolyCoeff::constant(1)});
  c.parameters = {{"omega", omega}, {"q", q}};
  // (k+2)(k+1) b_{k+2} = -2 q omega (k+1) b_{k+1} - omega^2 b_k
  auto series = [friction, stiffness](Rational y0, Rational y1) {
    return [=](std::size_t last) {
      std::vector<Rational> b(last + 2);
      b[0] = y0;
      b[1] = y1;
      for (std::size_t k = 0; k + 2 <= last; ++k) {
        b[k + 2] = -(friction * (k + 1) * b[k + 1] + stiffness * b[k]) / ((k + 2) * (k + 1));
      }
      b.resize(last + 1);
      return TaylorCoeffs(std::move(b));
    };
  };
  c.solutions.push_back({"z(0)=0, z'(0)=1", series(0, 1)});
  c.solutions.push_back({"z(0)=1, z'(0)=0", series(1, 0)});
  return c;
}

CorpusCase gaussian_case() {
  CorpusCase c;
  c.name = "gaussian";
  c.eq = linear(1, {PolyCoeff{Monomial{1, Rational(1)}}, PolyCoeff::constant(1)});
  c.solutions.push_back({"exp(-t^2/2)", [](std::size_t last) {
                           std::vector<Rational> b(last + 1);
                           for (std::size_t k = 0; 2 * k <= last; ++k) {
                             b[2 * k] = pow(Rational(-1, 2), k) * recip_factorial(static_cast<long>(k));
                           }
                           return TaylorCoeffs(std::move(b));
                         }});
  return c;
}

namespace {

void check_pochhammer(const Rational& c, std::size_t n) {
  // (c)_k = 0 for some k <= n exactly when c is in {0, -1, ..., -(n-1)}.
  if (is_nonpositive_integer(c) && -c < n) {
    throw Error(ErrorCode::pochhammer_pole, "(c)_k vanishes for c = " + to_string(c));
  }
}

std::vector<Rational> hypergeometric_coefficients(const Rational& a, const Rational& b, const Rational& c,
                                                  std::size_t last) {
  check_pochhammer(c, last + 1);
  std::vector<Rational> out(last + 1);
  Rational term = 1;
  for (std::size_t k = 0; k <= last; ++k) {
    out[k] = term;
    term *= (a + k) * (b + k) / ((c + k) * (k + 1));
  }
  return out;
}

}  // namespace

Rational gauss_sum(std::size_t n, const Rational& a, const Rational& b, const Rational& c) {
  check_pochhammer(c, n);
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += rising_factorial(a, k) * rising_factorial(b, k) / rising_factorial(c, k) *
           recip_factorial(static_cast<long>(k)) * falling_factorial(n, k);
  }
  return acc;
}

CorpusCase hypergeometric_case(const Rational& a, const Rational& b, const Rational& c) {
  if (is_nonpositive_integer(c)) {
    throw Error(ErrorCode::pochhammer_pole, "c = " + to_string(c) + " is a nonpositive integer");
  }
  CorpusCase out;
  out.name = "hypergeometric(a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c) + ")";
  out.eq = linear(2, {PolyCoeff::constant(-a * b), PolyCoeff{Monomial{0, c}, Monomial{1, -(a + b + 1)}},
                      PolyCoeff{Monomial{1, Rational(1)}, Monomial{2, Rational(-1)}}});
  out.parameters = {{"a", a}, {"b", b}, {"c", c}};
  out.steppable = false;
  out.solutions.push_back({"2F1(a,b;c;t)", [a, b, c](std::size_t last) {
                             return TaylorCoeffs(hypergeometric_coefficients(a, b, c, last));
                           }});
  return out;
}

CorpusCase riccati_case(std::size_t k, const Rational& c1, const Rational& c2) {
  const Rational shift = c1 + k * c2;
  if (shift == 0) throw Error(ErrorCode::singular_at_origin, "c1 + k c2 = 0 puts a pole at t = 0");
  CorpusCase c;
  c.name = "riccati(k=" + std::to_string(k) + ", c1=" + to_string(c1) + ", c2=" + to_string(c2) + ")";
  NonlinearOde eq;
  eq.deriv_order = 1;
  eq.coeffs = {PolyCoeff{}, PolyCoeff{}, PolyCoeff{Monomial{k, Rational(1)}}};
  eq.validate();
  c.eq = eq;
  c.parameters = {{"k", Rational(static_cast<unsigned long>(k))}, {"c1", c1}, {"c2", c2}};
  c.verify_last = 10;
  c.solutions.push_back({"-(k+1)/(t^(k+1) + c1 + k c2)", [k, shift](std::size_t last) {
                           std::vector<Rational> denom(k + 2);
                           denom[0] = shift;
                           denom[k + 1] = 1;
                           std::vector<Rational> b = series::reciprocal(denom, last + 1);
                           for (auto& x : b) x *= -static_cast<long>(k + 1);
                           return TaylorCoeffs(std::move(b));
                         }});
  return c;
}

Polynomial hermite_polynomial(std::size_t m) {
  // He_{n+1} = t He_n - n He_{n-1}
  Polynomial prev = Polynomial::constant(1);
  if (m == 0) return prev;
  Polynomial cur = Polynomial::monomial(1);
  for (std::size_t n = 1; n < m; ++n) {
    Polynomial next = cur * Polynomial::monomial(1) - prev * Rational(static_cast<unsigned long>(n));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CorpusCase hermite_case(std::size_t m) {
  CorpusCase c;
  c.name = "hermite(m=" + std::to_string(m) + ")";
  c.eq = linear(2, {PolyCoeff::constant(Rational(static_cast<unsigned long>(m))), PolyCoeff{Monomial{1, Rational(-1)}},
                    PolyCoeff::constant(1)});
  c.parameters = {{"m", Rational(static_cast<unsigned long>(m))}};
  const Polynomial he = hermite_polynomial(m);
  c.solutions.push_back({"He_" + std::to_string(m) + "(t)",
                         [he](std::size_t last) { return taylor_from_polynomial(he, last); }});
  return c;
}

namespace {

void check_gamma_arguments(std::size_t m, const Rational& alpha, const Rational& beta) {
  auto check = [](const Rational& arg) {
    if (is_nonpositive_integer(arg)) throw Error(ErrorCode::gamma_pole, "Gamma(" + to_string(arg) + ") is a pole");
  };
  check(alpha + m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    check(alpha + beta + m + k + 1);
    check(alpha + k + 1);
  }
}

}  // namespace

Polynomial jacobi_polynomial(std::size_t m, const Rational& alpha, const Rational& beta) {
  check_gamma_arguments(m, alpha, beta);
  // P_m = 1/m! sum_k C(m,k) (alpha+beta+m+1)_k (alpha+k+1)_{m-k} ((t-1)/2)^k
  const Polynomial half_shift{Rational(-1, 2), Rational(1, 2)};
  Polynomial power = Polynomial::constant(1);
  Polynomial acc;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational coeff = Rational(binomial(m, k)) * rising_factorial(alpha + beta + m + 1, k) *
                           rising_factorial(alpha + k + 1, m - k) * recip_factorial(static_cast<long>(m));
    acc += power * coeff;
    power = power * half_shift;
  }
  return acc;
}

CorpusCase jacobi_case(std::size_t m, const Rational& alpha, const Rational& beta) {
  const Polynomial p = jacobi_polynomial(m, alpha, beta);
  CorpusCase c;
  c.name = "jacobi(m=" + std::to_string(m) + ", alpha=" + to_string(alpha) + ", beta=" + to_string(beta) + ")";
  const Rational mm(static_cast<unsigned long>(m));
  c.eq = linear(2, {PolyCoeff::constant(mm * (mm + alpha + beta + 1)),
                    PolyCoeff{Monomial{0, beta - alpha}, Monomial{1, -(alpha + beta + 2)}},
                    PolyCoeff{Monomial{0, Rational(1)}, Monomial{2, Rational(-1)}}});
  c.parameters = {{"m", mm}, {"alpha", alpha}, {"beta", beta}};
  c.solutions.push_back({"P_" + std::to_string(m) + "(t)",
                         [p](std::size_t last) { return taylor_from_polynomial(p, last); }});
  return c;
}

Rational jacobi_alternate_formula(std::size_t n, std::size_t m, const Rational& alpha, const Rational& beta) {
  check_gamma_arguments(m, alpha, beta);
  const Rational n_minus_one = Rational(static_cast<unsigned long>(n)) - 1;
  Rational acc = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    acc += Rational(binomial(m, k)) * rising_factorial(alpha + beta + m + 1, k) * pow(Rational(1, 2), k) *
           falling_factorial(n_minus_one, k);
  }
  return acc * recip_factorial(static_cast<long>(m));
}

JacobiComparison compare_jacobi(std::size_t m, const Rational& alpha, const Rational& beta, std::size_t last) {
  const CorpusCase c = jacobi_case(m, alpha, beta);
  const auto& eq = std::get<LinearOde>(c.eq);
  JacobiComparison out;
  const std::size_t reach = last + eq.order;
  const LatticeSeq termwise = taylor_to_lattice(c.solutions.front().taylor(reach), reach);
  std::vector<Rational> alternate(reach + 1);
  for (std::size_t n = 0; n <= reach; ++n) alternate[n] = jacobi_alternate_formula(n, m, alpha, beta);
  out.termwise.assign(termwise.begin(), termwise.begin() + static_cast<std::ptrdiff_t>(last + 1));
  out.alternate.assign(alternate.begin(), alternate.begin() + static_cast<std::ptrdiff_t>(last + 1));
  out.values_agree = out.termwise == out.alternate;
  const LatticeSeq alt(std::move(alternate));
  out.alternate_solves = true;
  for (std::size_t n = 0; n <= last; ++n) {
    if (lin_residual(eq, alt, n) != 0) {
      out.alternate_solves = false;
      break;
    }
  }
  return out;
}

std::vector<CorpusCase> default_corpus() {
  std::vector<CorpusCase> cases;
  cases.push_back(harmonic_case(1));
  cases.push_back(harmonic_case(Rational(2, 3)));
  cases.push_back(damped_case(1, Rational(1, 2)));
  cases.push_back(damped_case(Rational(3, 2), Rational(1, 4)));
  cases.push_back(gaussian_case());
  cases.push_back(hypergeometric_case(Rational(1, 2), Rational(1, 3), Rational(5, 4)));
  cases.push_back(riccati_case(0, -1, 0));
  cases.push_back(riccati_case(1, -2, 0));
  cases.push_back(riccati_case(2, Rational(3, 2), Rational(1, 4)));
  for (std::size_t m = 0; m <= 6; ++m) cases.push_back(hermite_case(m));
  for (std::size_t m = 0; m <= 4; ++m) cases.push_back(jacobi_case(m, Rational(1, 2), Rational(-1, 3)));
  return cases;
}

}  // namespace umbral::corpus
