#include "umbral/series.hpp"

#include <algorithm>

#include "umbral/error.hpp"

namespace umbral::series {

std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b, std::size_t length) {
  std::vector<Rational> c(length);
  for (std::size_t i = 0; i < std::min(a.size(), length); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<Rational> reciprocal(std::span<const Rational> a, std::size_t length) {
  if (a.empty() || a[0] == 0) {
    throw Error(ErrorCode::not_invertible, "series with zero constant term has no reciprocal");
  }
  std::vector<Rational> r(length);
  if (length == 0) return r;
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < length; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * r[n - k];
    r[n] = -acc / a[0];
  }
  return r;
}

std::vector<Rational> compose(std::span<const Rational> outer, std::span<const Rational> inner, std::size_t length) {
  if (!inner.empty() && inner[0] != 0) {
    throw Error(ErrorCode::constraint_violation, "inner series of a composition must have zero constant term");
  }
  std::vector<Rational> result(length);
  std::vector<Rational> power(length);  // inner^k, starting with k = 0
  if (length > 0) power[0] = 1;
  for (std::size_t k = 0; k < outer.size() && k < length; ++k) {
    if (k > 0) power = multiply(power, inner, length);
    if (outer[k] == 0) continue;
    for (std::size_t i = 0; i < length; ++i) result[i] += outer[k] * power[i];
  }
  return result;
}

}  // namespace umbral::series
