#pragma once

#include <span>
#include <vector>

// Floating-point star powers for benchmarking only. Verification code paths
// never use these; results are not exact and may overflow for long inputs.
namespace umbral::approx {

using Real = long double;

/// Convolution path in the binomially scaled basis zeta_k k!, which keeps
/// the intermediate magnitudes bounded by binomial coefficients.
std::vector<Real> star_power_convolution(std::span<const Real> z, unsigned p);

/// Direct kernel path; same contract as umbral::star_power with StarPath::kernel.
std::vector<Real> star_power_kernel(std::span<const Real> z, unsigned p);

}  // namespace umbral::approx
