#pragma once

#include <cstddef>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

/// Finite difference operator (1/sigma) * sum_{k=l..m} alpha_k T^k, where T is
/// the unit shift. alphas[i] holds alpha_{l+i}.
struct DeltaStencil {
  Rational sigma = 1;
  long l = 0;
  std::vector<Rational> alphas;

  long m() const noexcept { return l + static_cast<long>(alphas.size()) - 1; }
  Rational alpha(long k) const;

  friend bool operator==(const DeltaStencil&, const DeltaStencil&) = default;
};

DeltaStencil forward_difference(const Rational& sigma = 1);
DeltaStencil backward_difference(const Rational& sigma = 1);
DeltaStencil symmetric_difference(const Rational& sigma = 1);

/// Coefficients s_0..s_degree of the symbol (1/sigma) sum_k alpha_k e^{k sigma v}
/// as a power series in v: s_j = sigma^{j-1} sum_k alpha_k k^j / j!.
std::vector<Rational> stencil_symbol(const DeltaStencil& s, std::size_t degree);

/// Checks the stencil constraints and returns the approximation order: the
/// largest p <= max_order with symbol = v + O(v^{p+1}).
///
/// Throws ConstraintViolation when sum alpha_k != 0 or sum k alpha_k != 1,
/// and NotADeltaOperator for malformed stencils (l >= m, vanishing end
/// coefficients, sigma <= 0).
unsigned validate_stencil(const DeltaStencil& s, unsigned max_order = 16);

/// (1/sigma) sum_k alpha_k z_{n+k}; every z_{n+k} must be stored.
Rational apply_stencil(const DeltaStencil& s, const LatticeSeq& z, std::ptrdiff_t n);

/// The stencil acting on a polynomial in x: (1/sigma) sum_k alpha_k p(x + k sigma).
Polynomial apply_stencil(const DeltaStencil& s, const Polynomial& p);

/// Power series u^1..u^D with nonzero linear coefficient; coeffs[i] multiplies u^{i+1}.
struct FormalSeries {
  std::vector<Rational> coeffs;

  std::size_t degree() const noexcept { return coeffs.size(); }
  /// Dense form with the zero constant term included.
  std::vector<Rational> dense() const;

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;
};

/// F(G(v)) truncated to degree max(F.degree(), G.degree()).
FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner);

/// The compositional inverse G with F(G(v)) = v through degree F.degree().
/// Throws NotInvertible when the linear coefficient vanishes.
FormalSeries series_inverse(const FormalSeries& f);

/// q_0..q_D with q_0 = 1, q_n(0) = 0 and Q q_n = n q_{n-1}.
struct BasicSequence {
  std::vector<Polynomial> polys;
};

/// Built degree by degree with a triangular solve on monomial coefficients.
BasicSequence basic_sequence(const DeltaStencil& s, std::size_t max_degree);

}  // namespace umbral
