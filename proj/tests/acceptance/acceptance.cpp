// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include <umbral/corpus.hpp>
#include <umbral/delta.hpp>
#include <umbral/discretize.hpp>
#include <umbral/fourier.hpp>
#include <umbral/galois.hpp>
#include <umbral/star.hpp>
#include <umbral/star_float.hpp>
#include <umbral/transform.hpp>

#include "oracles.hpp"

using namespace umbral;
using umbral::testing::RationalGen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LatticeSeq powers(long base, std::size_t length) {
  std::vector<Rational> v;
  for (unsigned long n = 0; n < length; ++n) v.push_back(pow(Rational(base), n));
  return LatticeSeq(std::move(v));
}

bool linear_case_vanishes(corpus::CorpusCase c, std::size_t last) {
  c.verify_last = last;
  return corpus::verify_case(c).passed;
}

bool transform_duality(std::string& detail) {
  RationalGen gen(1001);
  const auto t0 = Clock::now();
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const FourierSeq zeta(gen.vector(gen.index(1, 64)));
    ok = ok && inverse_transform(forward_transform(zeta)) == zeta;
  }
  const double s = seconds_since(t0);
  detail = "200 sequences in " + std::to_string(s) + " s";
  return ok && s < 5.0;
}

bool kernel_oracle(std::string& detail) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  bool ok = true;
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t n = 0; n <= 8; ++n) {
      std::vector<std::size_t> ks(p, 0);
      while (true) {
        std::size_t sum = 0;
        for (auto k : ks) sum += k;
        if (sum <= n) {
          const StarKernelArgs args{n, ks};
          ok = ok && star_kernel_closed(args) == star_kernel_bruteforce(args);
          ++checked;
        }
        std::size_t i = 0;
        while (i < p && ks[i] == n) ks[i++] = 0;
        if (i == p) break;
        ++ks[i];
      }
    }
  }
  const double s = seconds_since(t0);
  detail = std::to_string(checked) + " kernel arguments in " + std::to_string(s) + " s";
  return ok && s < 10.0;
}

bool leibniz(std::string& detail) {
  RationalGen gen(1003);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeSeq u(gen.vector(12));
    const LatticeSeq v(gen.vector(12));
    const LatticeSeq lhs = delta_power(star_multiply(u, v), 1);
    const LatticeSeq a = star_multiply(delta_power(u, 1), v.prefix(11));
    const LatticeSeq b = star_multiply(u.prefix(11), delta_power(v, 1));
    for (std::size_t n = 0; n < 11; ++n) ok = ok && lhs[n] == a[n] + b[n];
  }
  detail = "100 random length-12 pairs";
  return ok;
}

bool linear_transfer(std::string& detail) {
  bool ok = linear_case_vanishes(corpus::harmonic_case(1), 20);
  ok = ok && linear_case_vanishes(corpus::damped_case(1, Rational(1, 2)), 20);
  ok = ok && linear_case_vanishes(corpus::gaussian_case(), 20);
  for (std::size_t m = 0; m <= 6; ++m) ok = ok && linear_case_vanishes(corpus::hermite_case(m), 20);
  ok = ok && linear_case_vanishes(corpus::hypergeometric_case(Rational(1, 2), Rational(1, 3), Rational(5, 4)), 20);

  const corpus::CorpusCase h = corpus::harmonic_case(1);
  const std::vector<Rational> init{0, 1};
  const LatticeSeq stepped = lin_step(std::get<LinearOde>(h.eq), init, 20);
  const LatticeSeq sine = taylor_to_lattice(h.solutions.at(0).taylor(20), 20);
  ok = ok && stepped == sine && stepped.prefix(6) == LatticeSeq{0, 1, 2, 2, 0, -4};
  detail = "harmonic, damped, Gaussian, Hermite m<=6, hypergeometric; n<=20";
  return ok;
}

bool nonlinear_transfer(std::string& detail) {
  const NonlinearOde square{1, {PolyCoeff{}, PolyCoeff{}, PolyCoeff::constant(1)}};
  const std::vector<Rational> one{1};
  const LatticeSeq z = nonlin_step(square, one, 12);
  const LatticeSeq ones = taylor_to_lattice(TaylorCoeffs(std::vector<Rational>(13, Rational(1))), 12);
  bool ok = z.prefix(5) == LatticeSeq{1, 2, 5, 16, 65} && z == ones;
  ok = ok && linear_case_vanishes(corpus::riccati_case(1, -2, 0), 10);
  ok = ok && linear_case_vanishes(corpus::riccati_case(1, Rational(3, 2), Rational(-1, 4)), 10);
  detail = "z' = z^2 to n=12; z' = t z^2 residual to n=10";
  return ok;
}

bool homomorphy(std::string& detail) {
  detail = "2^n * 2^n = 3^n, n<=30";
  return star_multiply(powers(2, 31), powers(2, 31)) == powers(3, 31);
}

bool fourier_dynamics(std::string& detail) {
  const ConstNonlinearOde eq{1, {0, 1}, 0};
  const std::vector<Rational> one{1};
  const FourierSeq zeta = fourier_step(eq, one, 30);
  bool ok = zeta == FourierSeq(std::vector<Rational>(31, Rational(1)));
  ok = ok && forward_transform(zeta) == nonlin_step(eq.to_nonlinear(), one, 30);
  RationalGen gen(1007);
  for (int trial = 0; trial < 50; ++trial) {
    const TaylorCoeffs b(gen.vector(21));
    for (std::size_t n = 0; n <= 20; ++n) ok = ok && fourier_solution(b, n) == b[n];
  }
  detail = "zeta_n = 1 to n=30; lattice agreement; 50 collapse checks";
  return ok;
}

bool galois_content(std::string& detail) {
  RationalGen gen(1008);
  bool ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = gen.index(1, 4);
    std::set<Rational> roots;
    while (roots.size() < order) roots.insert(gen(9, 3) / 3);
    Polynomial p = Polynomial::constant(1);
    for (const auto& r : roots) p = p * Polynomial{-r, Rational(1)};
    const ConstLinearEq eq{order, std::vector<Rational>(p.coeffs().begin(), p.coeffs().end() - 1)};
    const FundamentalReport report = verify_fundamental(eq, 20 + order);
    ok = ok && report.passed && report.dimension == order;
    for (const auto& g : report.generators) ok = ok && g.exact && g.max_residual == 0;
    ok = ok && std::holds_alternative<Rational>(report.wronskian) && std::get<Rational>(report.wronskian) != 0;
  }
  const FundamentalReport harmonic = verify_fundamental({2, {1, 0}}, 22);
  ok = ok && harmonic.passed && std::get<Rational>(harmonic.wronskian) == -1;
  detail = "20 random equations with distinct rational roots; harmonic Wronskian -1";
  return ok;
}

bool delta_orders(std::string& detail) {
  bool ok = validate_stencil(forward_difference()) == 1 && validate_stencil(symmetric_difference()) == 2;
  const DeltaStencil four{1, -1, {Rational(-1, 3), Rational(-1, 2), 1, Rational(-1, 6)}};
  const unsigned order = validate_stencil(four);
  const auto symbol = stencil_symbol(four, 6);
  unsigned expansion = 0;
  for (std::size_t j = 2; j < symbol.size() && symbol[j] == 0; ++j) expansion = static_cast<unsigned>(j);
  ok = ok && order == 3 && order == expansion;
  const BasicSequence basic = basic_sequence(forward_difference(), 12);
  Polynomial falling = Polynomial::constant(1);
  for (std::size_t n = 0; n <= 12; ++n) {
    ok = ok && basic.polys.at(n) == falling;
    falling = falling * Polynomial{-Rational(static_cast<unsigned long>(n)), Rational(1)};
  }
  detail = "forward 1, symmetric 2, four-point " + std::to_string(order) + "; falling factorials to degree 12";
  return ok;
}

bool performance(std::string& detail) {
  std::vector<approx::Real> big(2000);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = std::sin(static_cast<double>(i));
  auto t0 = Clock::now();
  const auto conv_big = approx::star_power_convolution(big, 3);
  const double big_s = seconds_since(t0);

  const std::vector<approx::Real> small(big.begin(), big.begin() + 256);
  t0 = Clock::now();
  const auto conv = approx::star_power_convolution(small, 3);
  const double conv_s = seconds_since(t0);
  t0 = Clock::now();
  const auto kern = approx::star_power_kernel(small, 3);
  const double kern_s = seconds_since(t0);

  char buf[160];
  std::snprintf(buf, sizeof buf, "L=2000 convolution %.3f s; L=256 convolution %.4f s vs kernel %.4f s", big_s,
                conv_s, kern_s);
  detail = buf;
  return conv_big.size() == 2000 && conv_s < kern_s;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"transform duality", transform_duality},
      {"star kernel oracle", kernel_oracle},
      {"Leibniz rule", leibniz},
      {"linear solution transfer", linear_transfer},
      {"nonlinear solution transfer", nonlinear_transfer},
      {"morphism homomorphy", homomorphy},
      {"Fourier dynamics", fourier_dynamics},
      {"fundamental systems", galois_content},
      {"delta operator orders", delta_orders},
      {"star power performance", performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
