#pragma once

#include <cstddef>

#include "umbral/sequence.hpp"

namespace umbral {

/// z_n = sum_{l<=n} zeta_l (n)_l. Triangular: z_n depends on zeta_0..zeta_n only.
LatticeSeq forward_transform(const FourierSeq& zeta);

/// zeta_n = sum_{l<=n} (-1)^{n-l} z_l / (l! (n-l)!). Exact inverse of forward_transform.
FourierSeq inverse_transform(const LatticeSeq& z);

/// Lattice image of a formal power series: z_n = sum_{k<=n} b_k n!/(n-k)!
/// for n = 0..last. Needs b_0..b_last stored.
LatticeSeq taylor_to_lattice(const TaylorCoeffs& b, std::size_t last);

}  // namespace umbral
