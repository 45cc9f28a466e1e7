#include "umbral/rational.hpp"

#include <cctype>
#include <string>

#include "umbral/error.hpp"

namespace umbral {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::constraint_violation: return "ConstraintViolation";
    case ErrorCode::not_a_delta_operator: return "NotADeltaOperator";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::arity_zero: return "ArityZero";
    case ErrorCode::order_too_large: return "OrderTooLarge";
    case ErrorCode::not_forward_solvable: return "NotForwardSolvable";
    case ErrorCode::singular_system: return "SingularSystem";
    case ErrorCode::pochhammer_pole: return "PochhammerPole";
    case ErrorCode::singular_at_origin: return "SingularAtOrigin";
    case ErrorCode::gamma_pole: return "GammaPole";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::rational_parse_error: return "RationalParseError";
  }
  return "UnknownError";
}

std::string to_string(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::rational_parse_error, "malformed rational '" + std::string(text) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::rational_parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? BigInt(-p) : p, q);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational recip_factorial(long k) {
  if (k < 0) return Rational(0);
  return Rational(BigInt(1), factorial(static_cast<unsigned long>(k)));
}

Rational falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  BigInt r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= n - i;
  return Rational(r);
}

Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational rising_factorial(const Rational& x, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x + i;
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

bool is_nonpositive_integer(const Rational& value) {
  return value.get_den() == 1 && value <= 0;
}

}  // namespace umbral
