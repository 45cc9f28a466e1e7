#include "umbral/star.hpp"

#include <numeric>
#include <string>

#include "umbral/error.hpp"
#include "umbral/series.hpp"
#include "umbral/transform.hpp"

namespace umbral {

namespace {

std::vector<Rational> coefficients_of(const LatticeSeq& z) {
  const FourierSeq zeta = inverse_transform(z);
  return std::vector<Rational>(zeta.begin(), zeta.end());
}

// Enumerates ordered tuples (k_1..k_arity) with sum <= budget and calls
// visit(sum, product) where product = prod weights[k_i].
template <class Visit>
void for_each_tuple(const std::vector<Rational>& weights, unsigned arity, std::size_t budget,
                    const Rational& partial, std::size_t partial_sum, Visit&& visit) {
  if (arity == 0) {
    visit(partial_sum, partial);
    return;
  }
  for (std::size_t k = 0; partial_sum + k <= budget; ++k) {
    if (weights[k] == 0) continue;
    for_each_tuple(weights, arity - 1, budget, Rational(partial * weights[k]), partial_sum + k, visit);
  }
}

}  // namespace

LatticeSeq star_multiply(const LatticeSeq& u, const LatticeSeq& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::length_mismatch,
                "star product of lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  const auto a = coefficients_of(u);
  const auto b = coefficients_of(v);
  return forward_transform(FourierSeq(series::multiply(a, b, u.size())));
}

LatticeSeq star_power(const LatticeSeq& z, unsigned p, StarPath path) {
  if (p == 0) throw Error(ErrorCode::arity_zero, "star power with zero factors; use the unit sequence");
  const std::size_t length = z.size();

  if (path == StarPath::convolution) {
    const auto zeta = coefficients_of(z);
    std::vector<Rational> acc = zeta;
    for (unsigned i = 1; i < p; ++i) acc = series::multiply(acc, zeta, length);
    return forward_transform(FourierSeq(std::move(acc)));
  }

  // z^{*p}_n = sum_{k_1..k_p, sum k <= n} prod((-1)^{k_i} z_{k_i}/k_i!) K_{n,k_1..k_p};
  // the closed-form kernel depends on the tuple only through s = sum k_i.
  std::vector<Rational> weights(length);
  for (std::size_t k = 0; k < length; ++k) {
    weights[k] = z[k] * recip_factorial(static_cast<long>(k));
    if (k % 2 == 1) weights[k] = -weights[k];
  }
  std::vector<Rational> out(length);
  StarKernelArgs args;
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<Rational> kernel_by_sum(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
      args.n = n;
      args.ks.assign(p, 0);
      args.ks[0] = s;
      kernel_by_sum[s] = star_kernel_closed(args);
    }
    Rational acc = 0;
    for_each_tuple(weights, p, n, Rational(1), 0,
                   [&](std::size_t s, const Rational& product) { acc += product * kernel_by_sum[s]; });
    out[n] = acc;
  }
  return LatticeSeq(std::move(out));
}

Rational star_kernel_closed(const StarKernelArgs& args) {
  const std::size_t p = args.arity();
  if (p == 0) throw Error(ErrorCode::arity_zero, "kernel needs at least one index");
  const std::size_t s = std::accumulate(args.ks.begin(), args.ks.end(), std::size_t{0});
  if (args.n < s) return Rational(0);
  const std::size_t gap = args.n - s;
  // 0^0 = 1 makes arity 1 the identity kernel.
  Rational value = pow(Rational(static_cast<unsigned long>(p - 1)), gap) * factorial(args.n) *
                   recip_factorial(static_cast<long>(gap));
  if (args.n % 2 == 1) value = -value;
  return value;
}

Rational star_kernel_bruteforce(const StarKernelArgs& args) {
  const std::size_t p = args.arity();
  if (p == 0) throw Error(ErrorCode::arity_zero, "kernel needs at least one index");
  const std::size_t n = args.n;
  const BigInt n_fact = factorial(n);
  Rational acc = 0;
  std::vector<std::size_t> ls(p, 0);
  // Odometer over [0, n]^p; terms vanish through recip_factorial at negative arguments.
  while (true) {
    const std::size_t sum_l = std::accumulate(ls.begin(), ls.end(), std::size_t{0});
    Rational term = recip_factorial(static_cast<long>(n) - static_cast<long>(sum_l));
    for (std::size_t i = 0; i < p && term != 0; ++i) {
      term *= recip_factorial(static_cast<long>(ls[i]) - static_cast<long>(args.ks[i]));
    }
    if (term != 0) {
      term *= n_fact;
      if (sum_l % 2 == 1) term = -term;
      acc += term;
    }
    std::size_t i = 0;
    while (i < p && ls[i] == n) ls[i++] = 0;
    if (i == p) break;
    ++ls[i];
  }
  return acc;
}

Rational monomial_kernel(std::size_t k, std::size_t j, std::size_t m, std::size_t n) {
  if (k < j + m || n < k) return Rational(0);
  Rational value = recip_factorial(static_cast<long>(j)) * recip_factorial(static_cast<long>(k - m - j)) *
                   falling_factorial(n, k);
  if ((k - j - m) % 2 == 1) value = -value;
  return value;
}

Rational monomial_star_at(std::size_t m, const LatticeSeq& w, std::size_t n, MonomialForm form) {
  if (n < m) return Rational(0);
  if (form == MonomialForm::shift) return falling_factorial(n, m) * w.at(static_cast<std::ptrdiff_t>(n - m));
  Rational acc = 0;
  for (std::size_t k = m; k <= n; ++k) {
    for (std::size_t j = 0; j + m <= k; ++j) acc += monomial_kernel(k, j, m, n) * w.at(static_cast<std::ptrdiff_t>(j));
  }
  return acc;
}

LatticeSeq monomial_star(std::size_t m, const LatticeSeq& w, MonomialForm form) {
  std::vector<Rational> out(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) out[n] = monomial_star_at(m, w, n, form);
  return LatticeSeq(std::move(out));
}

}  // namespace umbral
