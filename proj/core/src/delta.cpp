#include "umbral/delta.hpp"

#include <algorithm>
#include <string>

#include "umbral/error.hpp"
#include "umbral/series.hpp"

namespace umbral {

Rational DeltaStencil::alpha(long k) const {
  if (k < l || k > m()) return Rational(0);
  return alphas[static_cast<std::size_t>(k - l)];
}

DeltaStencil forward_difference(const Rational& sigma) {
  return DeltaStencil{sigma, 0, {Rational(-1), Rational(1)}};
}

DeltaStencil backward_difference(const Rational& sigma) {
  return DeltaStencil{sigma, -1, {Rational(-1), Rational(1)}};
}

DeltaStencil symmetric_difference(const Rational& sigma) {
  return DeltaStencil{sigma, -1, {Rational(-1, 2), Rational(0), Rational(1, 2)}};
}

std::vector<Rational> stencil_symbol(const DeltaStencil& s, std::size_t degree) {
  std::vector<Rational> out(degree + 1);
  Rational sigma_power = 1 / s.sigma;  // sigma^{j-1}
  for (std::size_t j = 0; j <= degree; ++j) {
    Rational moment = 0;  // sum_k alpha_k k^j
    for (long k = s.l; k <= s.m(); ++k) {
      moment += s.alpha(k) * pow(Rational(k), j);
    }
    out[j] = sigma_power * moment * recip_factorial(static_cast<long>(j));
    sigma_power *= s.sigma;
  }
  return out;
}

unsigned validate_stencil(const DeltaStencil& s, unsigned max_order) {
  if (s.alphas.size() < 2) {
    throw Error(ErrorCode::not_a_delta_operator, "stencil needs l < m");
  }
  if (s.sigma <= 0) {
    throw Error(ErrorCode::not_a_delta_operator, "lattice spacing must be positive");
  }
  if (s.alphas.front() == 0 || s.alphas.back() == 0) {
    throw Error(ErrorCode::not_a_delta_operator, "end coefficients alpha_l and alpha_m must be nonzero");
  }
  Rational sum = 0;
  Rational first_moment = 0;
  for (long k = s.l; k <= s.m(); ++k) {
    sum += s.alpha(k);
    first_moment += s.alpha(k) * k;
  }
  if (sum != 0) {
    throw Error(ErrorCode::constraint_violation, "sum of alpha_k is " + to_string(sum) + ", expected 0");
  }
  if (first_moment != 1) {
    throw Error(ErrorCode::constraint_violation,
                "sum of k*alpha_k is " + to_string(first_moment) + ", expected 1");
  }

  const std::vector<Rational> symbol = stencil_symbol(s, max_order + 1);
  if (symbol[0] != 0 || symbol[1] != 1) {
    throw Error(ErrorCode::not_a_delta_operator, "symbol does not start with v");
  }
  unsigned order = 1;
  while (order < max_order && symbol[order + 1] == 0) ++order;
  return order;
}

Rational apply_stencil(const DeltaStencil& s, const LatticeSeq& z, std::ptrdiff_t n) {
  Rational acc = 0;
  for (long k = s.l; k <= s.m(); ++k) {
    const Rational a = s.alpha(k);
    if (a == 0) continue;
    acc += a * z.at(n + k);
  }
  return acc / s.sigma;
}

Polynomial apply_stencil(const DeltaStencil& s, const Polynomial& p) {
  Polynomial acc;
  for (long k = s.l; k <= s.m(); ++k) {
    const Rational a = s.alpha(k);
    if (a == 0) continue;
    acc += p.shifted(s.sigma * k) * a;
  }
  return acc * (1 / s.sigma);
}

std::vector<Rational> FormalSeries::dense() const {
  std::vector<Rational> d(coeffs.size() + 1);
  std::copy(coeffs.begin(), coeffs.end(), d.begin() + 1);
  return d;
}

FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner) {
  const std::size_t degree = std::max(outer.degree(), inner.degree());
  std::vector<Rational> dense = series::compose(outer.dense(), inner.dense(), degree + 1);
  return FormalSeries{std::vector<Rational>(dense.begin() + 1, dense.end())};
}

FormalSeries series_inverse(const FormalSeries& f) {
  if (f.coeffs.empty() || f.coeffs.front() == 0) {
    throw Error(ErrorCode::not_invertible, "linear coefficient of the series is zero");
  }
  const std::size_t degree = f.degree();
  const std::vector<Rational> outer = f.dense();
  std::vector<Rational> g(degree + 1);
  // Coefficient d of F(G) equals f_1 g_d plus terms in g_1..g_{d-1} only, so
  // each g_d follows from the residual with g_d still zero.
  for (std::size_t d = 1; d <= degree; ++d) {
    const std::vector<Rational> fg = series::compose(outer, g, d + 1);
    const Rational target = d == 1 ? Rational(1) : Rational(0);
    g[d] = (target - fg[d]) / f.coeffs.front();
  }
  return FormalSeries{std::vector<Rational>(g.begin() + 1, g.end())};
}

BasicSequence basic_sequence(const DeltaStencil& s, std::size_t max_degree) {
  validate_stencil(s, 1);

  // images[j] = Q(x^j), a polynomial of degree j - 1 with leading coefficient j.
  std::vector<Polynomial> images(max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) images[j] = apply_stencil(s, Polynomial::monomial(j));

  BasicSequence out;
  out.polys.reserve(max_degree + 1);
  out.polys.push_back(Polynomial::constant(1));
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const Polynomial target = out.polys[n - 1] * Rational(static_cast<unsigned long>(n));
    // Unknowns c_1..c_n with sum_j c_j Q(x^j) = target; solve from the top degree down.
    std::vector<Rational> c(n + 1);
    for (std::size_t j = n; j >= 1; --j) {
      Rational residual = target.coeff(j - 1);
      for (std::size_t i = j + 1; i <= n; ++i) residual -= c[i] * images[i].coeff(j - 1);
      c[j] = residual / images[j].coeff(j - 1);
    }
    out.polys.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace umbral
