#include <gtest/gtest.h>

#include "pfactor/polynomial.hpp"
#include "pfactor/rational.hpp"

using namespace pfactor;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(-7, 2).str(), "-7/2");
  EXPECT_EQ(Rational(12).str(), "12");
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(Rational, Floor) {
  EXPECT_TRUE(Rational(7, 2).floor() == 3);
  EXPECT_TRUE(Rational(-7, 2).floor() == -4);
  EXPECT_TRUE(Rational(-6, 2).floor() == -3);
  EXPECT_TRUE(Rational(0).floor() == 0);
}

TEST(Rational, WideValues) {
  const Rational big(std::int64_t{1} << 40);
  EXPECT_EQ((big * big).str(), "1208925819614629174706176");
}

TEST(Polynomial, ParsesDisplayedForms) {
  const auto f = parse_polynomial("-16s^2+(12n-36)s+12n-12nd+16d^2+16d-14");
  const Point at{Rational(60), Rational(4), Rational(6)};
  // -576 + 684*6 + 720 - 2880 + 256 + 64 - 14
  EXPECT_EQ(f.eval(at), Rational(-576 + 684 * 6 + 720 - 2880 + 256 + 64 - 14));

  const auto g = parse_polynomial("-4/25(3n-20d-53)(3n-5d-8)");
  EXPECT_EQ(g.eval(at), Rational(-4, 25) * Rational(180 - 80 - 53) * Rational(180 - 20 - 8));
}

TEST(Polynomial, FloorSymbol) {
  const auto p = parse_polynomial("t");
  EXPECT_EQ(p.eval({Rational(0), Rational(1), Rational(0)}), Rational(0));
  EXPECT_EQ(p.eval({Rational(0), Rational(2), Rational(0)}), Rational(1));
  EXPECT_EQ(p.eval({Rational(0), Rational(4), Rational(0)}), Rational(2));
  EXPECT_EQ(p.eval({Rational(0), Rational(8), Rational(0)}), Rational(5));
}

TEST(Polynomial, AlgebraIsConsistent) {
  EXPECT_EQ(parse_polynomial("(n+d)^2"), parse_polynomial("n^2+2nd+d^2"));
  EXPECT_EQ(parse_polynomial("(n-1)(n+1)"), parse_polynomial("n^2-1"));
  EXPECT_EQ(parse_polynomial("3*s/6"), parse_polynomial("1/2 s"));
  EXPECT_TRUE(parse_polynomial("(n-n)").is_constant());
  EXPECT_EQ(parse_polynomial("2(3)").constant(), Rational(6));
  EXPECT_EQ(parse_polynomial("-(n-2)"), parse_polynomial("2-n"));
  EXPECT_EQ(parse_polynomial(" 9 ( n - t - 2 ) ^2 "), parse_polynomial("9n^2-18nt-36n+9t^2+36t+36"));
}

TEST(Polynomial, ParseErrors) {
  for (const char* bad : {"", "n+", "(n", "n/d", "n/0", "x", "n^", "2)"}) {
    try {
      parse_polynomial(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}
