#include "umbral/transform.hpp"

#include <vector>

namespace umbral {

LatticeSeq forward_transform(const FourierSeq& zeta) {
  const std::size_t length = zeta.size();
  std::vector<Rational> z(length);
  for (std::size_t n = 0; n < length; ++n) {
    Rational acc = 0;
    BigInt falling = 1;  // (n)_l
    for (std::size_t l = 0; l <= n; ++l) {
      acc += zeta[l] * falling;
      falling *= n - l;
    }
    z[n] = acc;
  }
  return LatticeSeq(std::move(z));
}

FourierSeq inverse_transform(const LatticeSeq& z) {
  const std::size_t length = z.size();
  std::vector<Rational> inv_fact(length);
  for (std::size_t k = 0; k < length; ++k) inv_fact[k] = recip_factorial(static_cast<long>(k));

  std::vector<Rational> zeta(length);
  for (std::size_t n = 0; n < length; ++n) {
    Rational acc = 0;
    for (std::size_t l = 0; l <= n; ++l) {
      Rational term = z[l] * inv_fact[l] * inv_fact[n - l];
      if ((n - l) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    zeta[n] = acc;
  }
  return FourierSeq(std::move(zeta));
}

LatticeSeq taylor_to_lattice(const TaylorCoeffs& b, std::size_t last) {
  const TaylorCoeffs head = b.prefix(last + 1);
  return forward_transform(FourierSeq(std::vector<Rational>(head.begin(), head.end())));
}

}  // namespace umbral
