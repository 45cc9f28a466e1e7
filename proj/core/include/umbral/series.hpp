#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

// Truncated power-series helpers on dense coefficient vectors (index = power).
namespace umbral::series {

/// Cauchy product truncated to `length` coefficients.
std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b, std::size_t length);

/// 1/a to `length` coefficients; throws NotInvertible when a_0 = 0.
std::vector<Rational> reciprocal(std::span<const Rational> a, std::size_t length);

/// outer(inner(v)) with inner_0 = 0, truncated to `length` coefficients.
std::vector<Rational> compose(std::span<const Rational> outer, std::span<const Rational> inner, std::size_t length);

}  // namespace umbral::series
