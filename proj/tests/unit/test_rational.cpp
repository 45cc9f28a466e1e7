#include <gtest/gtest.h>

#include <umbral/error.hpp>
#include <umbral/rational.hpp>

namespace umbral {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an umbral::Error";
  return ErrorCode::schema_error;
}

TEST(Rational, CanonicalString) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-12"), Rational(-12));
  EXPECT_EQ(parse_rational("+0/5"), Rational(0));
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", " 1", "1/2/3", "--1"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::rational_parse_error) << bad;
  }
}

TEST(Rational, FallingFactorial) {
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(2, 5), 0);
  EXPECT_EQ(falling_factorial(5, 3), 60);
  EXPECT_EQ(falling_factorial(0, 0), 1);
  EXPECT_EQ(falling_factorial(Rational(-1), 3), -6);
}

TEST(Rational, RecipFactorialEncodesPrimedSums) {
  EXPECT_EQ(recip_factorial(0), 1);
  EXPECT_EQ(recip_factorial(4), Rational(1, 24));
  EXPECT_EQ(recip_factorial(-2), 0);
}

TEST(Rational, Pochhammer) {
  EXPECT_EQ(rising_factorial(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(rising_factorial(Rational(-2), 3), 0);
  EXPECT_TRUE(is_nonpositive_integer(Rational(-3)));
  EXPECT_FALSE(is_nonpositive_integer(Rational(-3, 2)));
  EXPECT_FALSE(is_nonpositive_integer(Rational(1)));
}

}  // namespace
}  // namespace umbral
