#include "umbral/discretize.hpp"

#include <algorithm>
#include <string>

#include "umbral/error.hpp"

namespace umbral {

PolyCoeff::PolyCoeff(std::initializer_list<Monomial> terms) : PolyCoeff(std::vector<Monomial>(terms)) {}

PolyCoeff::PolyCoeff(std::vector<Monomial> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Monomial& a, const Monomial& b) { return a.power < b.power; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().power == t.power) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Monomial& t) { return t.coeff == 0; });
}

PolyCoeff PolyCoeff::constant(const Rational& c) { return PolyCoeff{Monomial{0, c}}; }

Rational PolyCoeff::constant_term() const {
  if (!terms_.empty() && terms_.front().power == 0) return terms_.front().coeff;
  return Rational(0);
}

Rational PolyCoeff::lattice_image(std::size_t n) const {
  Rational acc = 0;
  for (const auto& t : terms_) acc += t.coeff * falling_factorial(n, t.power);
  return acc;
}

void LinearOde::validate() const {
  if (order == 0) throw Error(ErrorCode::constraint_violation, "linear equation needs order >= 1");
  if (coeffs.size() != order + 1) {
    throw Error(ErrorCode::constraint_violation, "expected " + std::to_string(order + 1) + " coefficients a_0..a_N, got " +
                                                    std::to_string(coeffs.size()));
  }
  if (coeffs.back().is_zero()) throw Error(ErrorCode::constraint_violation, "leading coefficient a_N is identically zero");
}

void NonlinearOde::validate() const {
  if (deriv_order == 0) throw Error(ErrorCode::constraint_violation, "derivative order must be >= 1");
  if (coeffs.size() < 2) throw Error(ErrorCode::constraint_violation, "need coefficients a_0..a_N with N >= 1");
  // z^{(m)} = a_0(t) (every a_j with j >= 1 zero) is allowed as the degenerate case.
  const bool degenerate =
      std::all_of(coeffs.begin() + 1, coeffs.end(), [](const PolyCoeff& a) { return a.is_zero(); });
  if (coeffs.back().is_zero() && !degenerate) {
    throw Error(ErrorCode::constraint_violation, "leading coefficient a_N is identically zero");
  }
}

Rational delta_at(const LatticeSeq& z, std::size_t l, std::size_t i) {
  if (i + l >= z.size()) {
    throw Error(ErrorCode::index_out_of_range, "Delta^" + std::to_string(l) + " at " + std::to_string(i) +
                                                  " needs z_" + std::to_string(i + l) + ", stored length " +
                                                  std::to_string(z.size()));
  }
  Rational acc = 0;
  for (std::size_t j = 0; j <= l; ++j) {
    const Rational term = binomial(l, j) * z[i + j];
    if ((l - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

LatticeSeq delta_power(const LatticeSeq& z, std::size_t l) {
  if (z.empty() || l >= z.size()) {
    throw Error(ErrorCode::order_too_large,
                "difference order " + std::to_string(l) + " for a sequence of length " + std::to_string(z.size()));
  }
  std::vector<Rational> d(z.begin(), z.end());
  for (std::size_t step = 0; step < l; ++step) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return LatticeSeq(std::move(d));
}

namespace {

void require_range(std::size_t needed_last, const LatticeSeq& z) {
  if (needed_last >= z.size()) {
    throw Error(ErrorCode::index_out_of_range, "residual needs z_" + std::to_string(needed_last) +
                                                  " but only " + std::to_string(z.size()) + " values are stored");
  }
}

}  // namespace

Rational lin_residual(const LinearOde& eq, const LatticeSeq& z, std::size_t n, MonomialForm form) {
  eq.validate();
  require_range(n + eq.order, z);
  Rational acc = 0;
  for (std::size_t l = 0; l <= eq.order; ++l) {
    const PolyCoeff& a = eq.coeffs[l];
    if (a.is_zero()) continue;
    if (form == MonomialForm::shift) {
      for (const auto& t : a.terms()) {
        if (n < t.power) continue;
        acc += t.coeff * falling_factorial(n, t.power) * delta_at(z, l, n - t.power);
      }
    } else {
      const LatticeSeq dz = delta_power(z.prefix(n + l + 1), l);
      for (const auto& t : a.terms()) acc += t.coeff * monomial_star_at(t.power, dz, n, form);
    }
  }
  return acc + eq.c0.lattice_image(n);
}

Rational nonlin_residual(const NonlinearOde& eq, const LatticeSeq& z, std::size_t n, StarPath path) {
  eq.validate();
  require_range(n + eq.deriv_order, z);
  Rational rhs = eq.coeffs[0].lattice_image(n);
  const LatticeSeq head = z.prefix(n + 1);
  for (std::size_t j = 1; j <= eq.degree(); ++j) {
    const PolyCoeff& a = eq.coeffs[j];
    if (a.is_zero()) continue;
    const LatticeSeq power = star_power(head, static_cast<unsigned>(j), path);
    for (const auto& t : a.terms()) rhs += t.coeff * monomial_star_at(t.power, power, n);
  }
  return delta_at(z, eq.deriv_order, n) - rhs;
}

LatticeSeq lin_step(const LinearOde& eq, std::span<const Rational> init, std::size_t last) {
  eq.validate();
  const std::size_t order = eq.order;
  const Rational lead = eq.coeffs[order].constant_term();
  if (lead == 0) {
    throw Error(ErrorCode::not_forward_solvable, "a_N(0) = 0: the lattice equation does not determine z_{n+N}");
  }
  if (init.size() != order) {
    throw Error(ErrorCode::constraint_violation,
                "expected " + std::to_string(order) + " initial values, got " + std::to_string(init.size()));
  }
  if (last + 1 < order) {
    throw Error(ErrorCode::index_out_of_range, "requested length is shorter than the initial data");
  }
  LatticeSeq z = LatticeSeq::zeros(last + 1);
  std::copy(init.begin(), init.end(), z.mutable_values().begin());
  // z_{n+N} enters the residual at n only through the local term a_N(0) Delta^N z_n,
  // with unit coefficient inside Delta^N.
  for (std::size_t n = 0; n + order <= last; ++n) {
    const LatticeSeq head = z.prefix(n + order + 1);
    const Rational r = lin_residual(eq, head, n);
    z[n + order] = -r / lead;
  }
  return z;
}

LatticeSeq nonlin_step(const NonlinearOde& eq, std::span<const Rational> init, std::size_t last) {
  eq.validate();
  const std::size_t m = eq.deriv_order;
  if (init.size() != m) {
    throw Error(ErrorCode::constraint_violation,
                "expected " + std::to_string(m) + " initial values, got " + std::to_string(init.size()));
  }
  if (last + 1 < m) {
    throw Error(ErrorCode::index_out_of_range, "requested length is shorter than the initial data");
  }
  LatticeSeq z = LatticeSeq::zeros(last + 1);
  std::copy(init.begin(), init.end(), z.mutable_values().begin());
  // Delta^m z_n has unit coefficient on z_{n+m}; the right side reads z_0..z_n only.
  for (std::size_t n = 0; n + m <= last; ++n) {
    const LatticeSeq head = z.prefix(n + m + 1);
    z[n + m] -= nonlin_residual(eq, head, n);
  }
  return z;
}

AffineForm lin_stencil(const LinearOde& eq, std::size_t n) {
  eq.validate();
  AffineForm form;
  form.coeffs.assign(n + eq.order + 1, Rational(0));
  for (std::size_t l = 0; l <= eq.order; ++l) {
    for (const auto& t : eq.coeffs[l].terms()) {
      if (n < t.power) continue;
      const Rational scale = t.coeff * falling_factorial(n, t.power);
      const std::size_t base = n - t.power;
      for (std::size_t j = 0; j <= l; ++j) {
        Rational c = scale * binomial(l, j);
        if ((l - j) % 2 == 1) c = -c;
        form.coeffs[base + j] += c;
      }
    }
  }
  form.constant = eq.c0.lattice_image(n);
  return form;
}

namespace {

// Adds coefficient * (z^{*arity})_target to poly, expanded through the
// closed-form kernel: ordered tuples contribute prod((-1)^k/k!) * K_{target,ks}.
void add_star_power_terms(LatticePolynomial& poly, std::size_t arity, std::size_t target, const Rational& coefficient) {
  std::vector<std::size_t> ks(arity, 0);
  StarKernelArgs args;
  args.n = target;
  while (true) {
    std::size_t sum = 0;
    for (auto k : ks) sum += k;
    if (sum <= target) {
      Rational c = coefficient;
      for (auto k : ks) {
        c *= recip_factorial(static_cast<long>(k));
        if (k % 2 == 1) c = -c;
      }
      args.ks = ks;
      c *= star_kernel_closed(args);
      if (c != 0) {
        std::vector<std::size_t> key = ks;
        std::sort(key.begin(), key.end());
        poly[key] += c;
      }
    }
    std::size_t i = 0;
    while (i < arity && ks[i] == target) ks[i++] = 0;
    if (i == arity) break;
    ++ks[i];
  }
}

}  // namespace

LatticePolynomial nonlin_terms(const NonlinearOde& eq, std::size_t n) {
  eq.validate();
  LatticePolynomial poly;
  const std::size_t m = eq.deriv_order;
  for (std::size_t j = 0; j <= m; ++j) {
    Rational c = binomial(m, j);
    if ((m - j) % 2 == 1) c = -c;
    poly[{n + j}] += c;
  }
  const Rational forcing = eq.coeffs[0].lattice_image(n);
  if (forcing != 0) poly[{}] -= forcing;
  for (std::size_t j = 1; j <= eq.degree(); ++j) {
    for (const auto& t : eq.coeffs[j].terms()) {
      if (n < t.power) continue;
      add_star_power_terms(poly, j, n - t.power, Rational(-t.coeff * falling_factorial(n, t.power)));
    }
  }
  std::erase_if(poly, [](const auto& entry) { return entry.second == 0; });
  return poly;
}

Rational evaluate(const LatticePolynomial& poly, const LatticeSeq& z) {
  Rational acc = 0;
  for (const auto& [indices, coeff] : poly) {
    Rational term = coeff;
    for (auto i : indices) term *= z.at(static_cast<std::ptrdiff_t>(i));
    acc += term;
  }
  return acc;
}

}  // namespace umbral
