#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/discretize.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

/// z^{(m)} = a_N z^N + ... + a_1 z + b0 with constant rational coefficients.
/// coeffs[j-1] holds a_j.
struct ConstNonlinearOde {
  std::size_t deriv_order = 1;
  std::vector<Rational> coeffs;
  Rational b0;

  std::size_t degree() const noexcept { return coeffs.size(); }
  /// The same equation with constant PolyCoeff coefficients.
  NonlinearOde to_nonlinear() const;
};

/// The N-term Cauchy convolution sum_{l_1+..+l_{N-1} <= n} zeta_{l_1}..zeta_{l_{N-1}} zeta_{n-sum},
/// by direct nested summation. N = 1 gives zeta_n.
Rational convolution_power_at(std::span<const Rational> zeta, std::size_t arity, std::size_t n);

/// Forward iteration of the coefficient dynamics
/// (n+m)!/n! zeta_{n+m} = sum_j a_j conv^j(zeta)_n + b0 [n = 0]
/// from zeta_0..zeta_{m-1}, up to index `last`.
FourierSeq fourier_step(const ConstNonlinearOde& eq, std::span<const Rational> zeta_init, std::size_t last);

/// sum_{l<=n} sum_{k<=l} (-1)^{n-l} b_k / ((n-l)! (l-k)!), evaluated literally.
Rational fourier_solution(const TaylorCoeffs& b, std::size_t n);

}  // namespace umbral
