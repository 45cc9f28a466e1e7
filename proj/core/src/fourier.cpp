#include "umbral/fourier.hpp"

#include <string>

#include "umbral/error.hpp"

namespace umbral {

NonlinearOde ConstNonlinearOde::to_nonlinear() const {
  NonlinearOde eq;
  eq.deriv_order = deriv_order;
  eq.coeffs.push_back(PolyCoeff::constant(b0));
  for (const auto& a : coeffs) eq.coeffs.push_back(PolyCoeff::constant(a));
  return eq;
}

namespace {

Rational convolve_rest(std::span<const Rational> zeta, std::size_t remaining, std::size_t budget) {
  if (remaining == 1) return zeta[budget];
  Rational acc = 0;
  for (std::size_t l = 0; l <= budget; ++l) {
    if (zeta[l] == 0) continue;
    acc += zeta[l] * convolve_rest(zeta, remaining - 1, budget - l);
  }
  return acc;
}

}  // namespace

Rational convolution_power_at(std::span<const Rational> zeta, std::size_t arity, std::size_t n) {
  if (arity == 0) throw Error(ErrorCode::arity_zero, "convolution power with zero factors");
  if (n >= zeta.size()) {
    throw Error(ErrorCode::index_out_of_range, "convolution at " + std::to_string(n) + " needs zeta_0..zeta_" +
                                                  std::to_string(n));
  }
  return convolve_rest(zeta, arity, n);
}

FourierSeq fourier_step(const ConstNonlinearOde& eq, std::span<const Rational> zeta_init, std::size_t last) {
  const std::size_t m = eq.deriv_order;
  if (m == 0) throw Error(ErrorCode::constraint_violation, "derivative order must be >= 1");
  if (zeta_init.size() != m) {
    throw Error(ErrorCode::constraint_violation,
                "expected " + std::to_string(m) + " initial coefficients, got " + std::to_string(zeta_init.size()));
  }
  if (last + 1 < m) throw Error(ErrorCode::index_out_of_range, "requested length is shorter than the initial data");

  std::vector<Rational> zeta(last + 1);
  std::copy(zeta_init.begin(), zeta_init.end(), zeta.begin());
  for (std::size_t n = 0; n + m <= last; ++n) {
    const std::span<const Rational> known(zeta.data(), n + 1);
    Rational rhs = n == 0 ? eq.b0 : Rational(0);
    for (std::size_t j = 1; j <= eq.degree(); ++j) {
      const Rational& a = eq.coeffs[j - 1];
      if (a == 0) continue;
      rhs += a * convolution_power_at(known, j, n);
    }
    // (n+m)!/n! = (n+m)_m
    zeta[n + m] = rhs / falling_factorial(n + m, m);
  }
  return FourierSeq(std::move(zeta));
}

Rational fourier_solution(const TaylorCoeffs& b, std::size_t n) {
  Rational acc = 0;
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::size_t k = 0; k <= l; ++k) {
      Rational term = b.at(static_cast<std::ptrdiff_t>(k)) * recip_factorial(static_cast<long>(n - l)) *
                      recip_factorial(static_cast<long>(l - k));
      if ((n - l) % 2 == 1) term = -term;
      acc += term;
    }
  }
  return acc;
}

}  // namespace umbral
