#pragma once

#include <cstddef>
#include <vector>

#include "umbral/sequence.hpp"

namespace umbral {

/// Lattice image of the star product p_a * p_b = p_{a+b} for the forward
/// difference. Both inputs must have the same length; the result is truncated
/// to that length.
LatticeSeq star_multiply(const LatticeSeq& u, const LatticeSeq& v);

enum class StarPath {
  convolution,  ///< transform, Cauchy convolution, transform back: O(p L^2)
  kernel,       ///< direct multi-sum with the closed-form kernel: O(L^{p+1})
};

/// z * z * ... * z (p factors). Throws ArityZero for p = 0.
LatticeSeq star_power(const LatticeSeq& z, unsigned p, StarPath path = StarPath::convolution);

struct StarKernelArgs {
  std::size_t n = 0;
  std::vector<std::size_t> ks;

  std::size_t arity() const noexcept { return ks.size(); }
};

/// (-1)^n n! (p-1)^{n-s} / (n-s)! with s = sum k_i, 0 when n < s, and 0^0 = 1.
Rational star_kernel_closed(const StarKernelArgs& args);

/// Literal evaluation of the restricted multi-sum over l_1..l_p in [0, n]:
/// sum (-1)^{sum l} prod 1/(l_i - k_i)! * n!/(n - sum l)!. Exponential in p;
/// meant as the oracle for star_kernel_closed.
Rational star_kernel_bruteforce(const StarKernelArgs& args);

enum class MonomialForm { shift, kernel };

/// K(k, j, m, n) = (-1)^{k-j-m} / (j! (k-m-j)!) * n!/(n-k)!, zero outside k >= j + m.
Rational monomial_kernel(std::size_t k, std::size_t j, std::size_t m, std::size_t n);

/// Lattice image of t^m * w. Shift form: (n)_m w_{n-m}; kernel form:
/// sum_k sum_j K(k, j, m, n) w_j. Entries with n < m are zero.
LatticeSeq monomial_star(std::size_t m, const LatticeSeq& w, MonomialForm form = MonomialForm::shift);

/// Entry n of monomial_star without building the whole sequence; reads w_0..w_{n-m}.
Rational monomial_star_at(std::size_t m, const LatticeSeq& w, std::size_t n,
                          MonomialForm form = MonomialForm::shift);

}  // namespace umbral
