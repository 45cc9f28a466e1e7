#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "umbral/sequence.hpp"
#include "umbral/star.hpp"

namespace umbral {

struct Monomial {
  std::size_t power = 0;
  Rational coeff;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial coefficient a(t) = sum alpha t^power. Construction sorts
/// by power, merges duplicates and drops zeros, so powers are strictly
/// increasing and no stored coefficient is zero.
class PolyCoeff {
 public:
  PolyCoeff() = default;
  PolyCoeff(std::initializer_list<Monomial> terms);
  explicit PolyCoeff(std::vector<Monomial> terms);

  static PolyCoeff constant(const Rational& c);

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational constant_term() const;
  /// Lattice image sum alpha (n)_power.
  Rational lattice_image(std::size_t n) const;

  friend bool operator==(const PolyCoeff&, const PolyCoeff&) = default;

 private:
  std::vector<Monomial> terms_;
};

/// a_N(t) z^{(N)} + ... + a_0(t) z + c0(t) = 0; coeffs holds a_0..a_N.
struct LinearOde {
  std::size_t order = 1;
  std::vector<PolyCoeff> coeffs;
  PolyCoeff c0;

  /// Throws ConstraintViolation unless coeffs.size() == order + 1 and a_N != 0.
  void validate() const;
  friend bool operator==(const LinearOde&, const LinearOde&) = default;
};

/// z^{(m)} = a_N(t) z^N + ... + a_1(t) z + a_0(t); coeffs holds a_0..a_N.
struct NonlinearOde {
  std::size_t deriv_order = 1;
  std::vector<PolyCoeff> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  void validate() const;
  friend bool operator==(const NonlinearOde&, const NonlinearOde&) = default;
};

/// l-fold forward difference; length L+1-l. Throws OrderTooLarge when l > L.
LatticeSeq delta_power(const LatticeSeq& z, std::size_t l);

/// (Delta^l z)_i = sum_j (-1)^{l-j} C(l,j) z_{i+j}; reads z_i..z_{i+l}.
Rational delta_at(const LatticeSeq& z, std::size_t l, std::size_t i);

/// Residual of the nonlocal lattice equation at n:
/// sum_l [a_l * Delta^l z]_n + sum_r gamma_r (n)_r, with each t^m factor
/// realized by monomial_star. Needs z_0..z_{n+N}.
Rational lin_residual(const LinearOde& eq, const LatticeSeq& z, std::size_t n,
                      MonomialForm form = MonomialForm::shift);

/// Residual (Delta^m z)_n - sum_{j>=1} [a_j * z^{*j}]_n - [a_0]_n. Needs z_0..z_{n+m}.
Rational nonlin_residual(const NonlinearOde& eq, const LatticeSeq& z, std::size_t n,
                         StarPath path = StarPath::convolution);

/// Solves the lattice equation forward from z_0..z_{N-1} up to index `last`.
/// Throws NotForwardSolvable when a_N(0) = 0.
LatticeSeq lin_step(const LinearOde& eq, std::span<const Rational> init, std::size_t last);

/// Solves the lattice equation forward from z_0..z_{m-1} up to index `last`.
LatticeSeq nonlin_step(const NonlinearOde& eq, std::span<const Rational> init, std::size_t last);

/// The linear lattice equation at n written out as an affine form:
/// residual = constant + sum_j coeffs[j] z_j, j = 0..n+N.
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;
};
AffineForm lin_stencil(const LinearOde& eq, std::size_t n);

/// The nonlinear lattice equation at n as a polynomial in z_0..z_{n+m}: each
/// key is a sorted multiset of indices (empty = constant term).
using LatticePolynomial = std::map<std::vector<std::size_t>, Rational>;
LatticePolynomial nonlin_terms(const NonlinearOde& eq, std::size_t n);

Rational evaluate(const LatticePolynomial& poly, const LatticeSeq& z);

}  // namespace umbral
