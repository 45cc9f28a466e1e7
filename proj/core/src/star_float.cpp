#include "umbral/star_float.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace umbral::approx {

namespace {

// Binomially scaled coefficients y_n = n! zeta_n = sum_l (-1)^{n-l} C(n,l) z_l.
std::vector<Real> to_scaled(std::span<const Real> z) {
  const std::size_t length = z.size();
  std::vector<Real> y(length);
  std::vector<Real> row(length, 0);  // C(n, l), updated in place row by row
  for (std::size_t n = 0; n < length; ++n) {
    row[n] = 1;
    for (std::size_t l = n - 1; n > 0 && l >= 1; --l) row[l] += row[l - 1];
    Real acc = 0;
    for (std::size_t l = 0; l <= n; ++l) {
      const Real term = row[l] * z[l];
      acc += ((n - l) % 2 == 0) ? term : -term;
    }
    y[n] = acc;
  }
  return y;
}

std::vector<Real> from_scaled(std::span<const Real> y) {
  const std::size_t length = y.size();
  std::vector<Real> z(length);
  std::vector<Real> row(length, 0);
  for (std::size_t n = 0; n < length; ++n) {
    row[n] = 1;
    for (std::size_t l = n - 1; n > 0 && l >= 1; --l) row[l] += row[l - 1];
    Real acc = 0;
    for (std::size_t l = 0; l <= n; ++l) acc += row[l] * y[l];
    z[n] = acc;
  }
  return z;
}

// Binomial convolution: (n! zeta)(n! eta) scaled product.
std::vector<Real> binomial_convolve(std::span<const Real> a, std::span<const Real> b) {
  const std::size_t length = a.size();
  std::vector<Real> c(length, 0);
  std::vector<Real> row(length, 0);
  for (std::size_t n = 0; n < length; ++n) {
    row[n] = 1;
    for (std::size_t l = n - 1; n > 0 && l >= 1; --l) row[l] += row[l - 1];
    Real acc = 0;
    for (std::size_t l = 0; l <= n; ++l) acc += row[l] * a[l] * b[n - l];
    c[n] = acc;
  }
  return c;
}

}  // namespace

std::vector<Real> star_power_convolution(std::span<const Real> z, unsigned p) {
  if (p == 0) throw std::invalid_argument("star power with zero factors");
  const std::vector<Real> y = to_scaled(z);
  std::vector<Real> acc = y;
  for (unsigned i = 1; i < p; ++i) acc = binomial_convolve(acc, y);
  return from_scaled(acc);
}

std::vector<Real> star_power_kernel(std::span<const Real> z, unsigned p) {
  if (p == 0) throw std::invalid_argument("star power with zero factors");
  const std::size_t length = z.size();
  std::vector<Real> log_fact(length + 1, 0);
  for (std::size_t k = 1; k <= length; ++k) log_fact[k] = log_fact[k - 1] + std::log(static_cast<Real>(k));

  // weight_k = (-1)^k z_k / k!, gap_r = (p-1)^r / r!
  std::vector<Real> weight(length);
  std::vector<Real> gap(length);
  for (std::size_t k = 0; k < length; ++k) {
    weight[k] = ((k % 2 == 0) ? 1 : -1) * z[k] * std::exp(-log_fact[k]);
    gap[k] = (p == 1) ? (k == 0 ? 1 : 0)
                      : std::exp(static_cast<Real>(k) * std::log(static_cast<Real>(p - 1)) - log_fact[k]);
  }

  std::vector<Real> out(length, 0);
  std::vector<std::size_t> ks(p, 0);
  for (std::size_t n = 0; n < length; ++n) {
    const Real scale = ((n % 2 == 0) ? 1 : -1) * std::exp(log_fact[n]);
    Real acc = 0;
    // Odometer over tuples with sum <= n; the last index runs in the inner loop.
    std::fill(ks.begin(), ks.end(), 0);
    while (true) {
      std::size_t head_sum = 0;
      Real head = 1;
      for (unsigned i = 0; i + 1 < p; ++i) {
        head_sum += ks[i];
        head *= weight[ks[i]];
      }
      for (std::size_t last = 0; head_sum + last <= n; ++last) {
        acc += head * weight[last] * gap[n - head_sum - last];
      }
      if (p == 1) break;
      unsigned i = 0;
      while (i + 1 < p) {
        ++ks[i];
        std::size_t s = 0;
        for (unsigned j = 0; j + 1 < p; ++j) s += ks[j];
        if (s <= n) break;
        ks[i] = 0;
        ++i;
      }
      if (i + 1 == p) break;
    }
    out[n] = scale * acc;
  }
  return out;
}

}  // namespace umbral::approx
