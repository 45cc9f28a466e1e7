#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

using Complex = std::complex<long double>;

/// y^{(N)} + a_{N-1} y^{(N-1)} + ... + a_0 y = 0, and its lattice partner
/// Delta^N z + ... + a_0 z = 0. coeffs holds a_0..a_{N-1}.
struct ConstLinearEq {
  std::size_t order = 1;
  std::vector<Rational> coeffs;

  void validate() const;
  /// lambda^N + a_{N-1} lambda^{N-1} + ... + a_0
  Polynomial characteristic() const;

  friend bool operator==(const ConstLinearEq&, const ConstLinearEq&) = default;
};

/// a + b sqrt(d) in Q(sqrt d); d is a non-square rational and may be negative.
struct QuadraticNumber {
  Rational a;
  Rational b;
  Rational d;

  QuadraticNumber conjugate() const { return {a, -b, d}; }
  Complex to_complex() const;
  std::string to_string() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
};

struct RootDatum {
  std::variant<Rational, QuadraticNumber, Complex> value;
  std::size_t multiplicity = 1;
  /// Relative residual |charpoly(lambda)| for float roots; zero for exact roots.
  long double residual = 0;

  bool exact() const noexcept { return !std::holds_alternative<Complex>(value); }
  Complex to_complex() const;
  std::string to_string() const;
};

/// Roots of the characteristic polynomial with multiplicities summing to N.
/// Rational roots are exact, irreducible quadratic factors give conjugate
/// surd pairs, and anything left is solved in long double; those roots
/// carry their relative residual, which is below 1e-12 for well-conditioned
/// factors.
std::vector<RootDatum> char_roots(const ConstLinearEq& eq);

/// Lattice image of t^j e^{lambda t}: z_n = (n)_j (1 + lambda)^{n-j}, n = 0..last.
LatticeSeq map_solution(const Rational& lambda, std::size_t j, std::size_t last);
std::vector<QuadraticNumber> map_solution(const QuadraticNumber& lambda, std::size_t j, std::size_t last);
std::vector<Complex> map_solution(const Complex& lambda, std::size_t j, std::size_t last);

using GeneratorValues = std::variant<LatticeSeq, std::vector<Complex>>;

/// Dispatches on the root kind. Throws ConstraintViolation when j >= multiplicity.
/// Quadratic roots are returned in complex form; use Generator for the real form.
GeneratorValues map_solution(const RootDatum& root, std::size_t j, std::size_t last);

enum class Component {
  whole,          ///< rational or float root: the mapped sequence itself
  surd_part,      ///< coefficient of sqrt(d) in the mapped sequence of a surd root
  rational_part,  ///< rational part of the mapped sequence of a surd root
};

struct Generator {
  RootDatum root;
  std::size_t power = 0;
  Component component = Component::whole;

  std::string label() const;
};

struct FundamentalSystem {
  std::vector<Generator> generators;

  bool exact() const;
};

/// Mapped fundamental system: per root lambda of multiplicity mu, the
/// generators (n)_j (1+lambda)^{n-j} for j < mu. A conjugate surd pair
/// contributes the rational and sqrt(d) parts of one member, which are
/// rational sequences spanning the same space.
FundamentalSystem fundamental_system(const ConstLinearEq& eq);

GeneratorValues evaluate(const Generator& g, std::size_t last);

/// (T[Delta] z)_n = sum_{i<=N} a_i (Delta^i z)_n with a_N = 1.
Rational apply_operator(const ConstLinearEq& eq, const LatticeSeq& z, std::size_t n);
Complex apply_operator(const ConstLinearEq& eq, std::span<const Complex> z, std::size_t n);

using WronskianValue = std::variant<Rational, Complex>;

/// det [Delta^i z^{(j)}]_{n0}, i = 0..N-1, over the given solutions.
/// Throws SingularSystem when the determinant is exactly zero.
Rational modified_wronskian(std::span<const LatticeSeq> solutions, std::size_t n0);

/// Exact when every generator is exact, complex otherwise. Needs last >= n0 + N.
/// Throws SingularSystem when the determinant is (numerically) zero.
WronskianValue modified_wronskian(const FundamentalSystem& sys, std::size_t n0, std::size_t last);

struct GeneratorCheck {
  std::string label;
  bool exact = true;
  /// Largest |T[Delta] z|_n over the checked range (relative for float generators).
  long double max_residual = 0;
  bool passed = false;
};

struct FundamentalReport {
  std::vector<RootDatum> roots;
  std::vector<GeneratorCheck> generators;
  std::size_t dimension = 0;
  std::variant<std::monostate, Rational, Complex> wronskian;
  bool singular = false;
  bool passed = false;
};

/// Builds the mapped fundamental system, checks T[Delta] z = 0 for
/// n = 0..last-N (exactly, or below 1e-9 relative for float roots), and
/// checks that the modified Wronskian at 0 is nonzero.
FundamentalReport verify_fundamental(const ConstLinearEq& eq, std::size_t last);

}  // namespace umbral
