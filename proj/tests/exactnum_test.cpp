#include <gtest/gtest.h>

#include <random>

#include "mombin/exactnum.hpp"
#include "oracles.hpp"

using namespace mombin;

namespace {

Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }

// Sign of c1*sqrt(r1) + ... evaluated with 512-bit floats; inputs are kept
// small so a zero result is only possible when the exact sum is zero.
int float_sign(const std::vector<RootTerm>& terms) {
  mpf_class acc(0, 512);
  for (const auto& t : terms) {
    mpf_class r(t.radicand.raw(), 512);
    mpf_class c(t.coefficient.raw(), 512);
    acc += c * sqrt(r);
  }
  if (abs(acc) < mpf_class("1e-100", 512)) return 0;
  return sgn(acc);
}

}  // namespace

TEST(ParseExact, DecimalsAreExactPowersOfTen) {
  EXPECT_EQ(parse_exact("0.37"), q(37, 100));
  EXPECT_EQ(parse_exact("1.13"), q(113, 100));
  EXPECT_EQ(parse_exact("-0.4"), q(-2, 5));
  EXPECT_EQ(parse_exact(".5"), q(1, 2));
  EXPECT_EQ(parse_exact("5."), Rational(5));
  EXPECT_EQ(parse_exact("+12"), Rational(12));
  EXPECT_EQ(parse_exact("  2.25 \r"), q(9, 4));
}

TEST(ParseExact, LeadingZerosAreDecimalNotOctal) {
  EXPECT_EQ(parse_exact("007"), Rational(7));
  EXPECT_EQ(parse_exact("0.037"), q(37, 1000));
  EXPECT_EQ(parse_exact("010/08"), q(5, 4));
}

TEST(ParseExact, Fractions) {
  EXPECT_EQ(parse_exact("-3/7"), q(-3, 7));
  EXPECT_EQ(parse_exact("6/4"), q(3, 2));
  EXPECT_EQ(parse_exact("0/5"), Rational(0));
}

TEST(ParseExact, RejectsMalformedInput) {
  for (const char* bad : {"", "abc", "1.2.3", "1/0", "1/", "/2", "--1", "1e5", "0x10", "2.x", ".", "1/-2"}) {
    EXPECT_THROW(parse_exact(bad), ParseError) << bad;
  }
}

TEST(Rational, AlwaysReduced) {
  const Rational r(mpz_class(-12), mpz_class(-18));
  EXPECT_EQ(r.numerator(), 2);
  EXPECT_EQ(r.denominator(), 3);
  const Rational s(mpz_class(5), mpz_class(-10));
  EXPECT_EQ(s.numerator(), -1);
  EXPECT_EQ(s.denominator(), 2);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, StringRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational r = oracle::random_rational(rng, -50, 50, 1 + static_cast<long>(rng() % 997));
    EXPECT_EQ(parse_exact(r.str()), r);
  }
  EXPECT_EQ(q(-3, 4).str(), "-3/4");
  EXPECT_EQ(Rational(6).str(), "6");
}

TEST(Rational, FloorAndPow) {
  EXPECT_EQ(floor(q(7, 2)), 3);
  EXPECT_EQ(floor(q(-7, 2)), -4);
  EXPECT_EQ(floor(Rational(-3)), -3);
  EXPECT_EQ(pow(q(-2, 3), 3), q(-8, 27));
  EXPECT_EQ(pow(q(5, 7), 0), Rational(1));
  EXPECT_EQ(abs(q(-5, 7)), q(5, 7));
}

TEST(Rational, FieldLawsOnRandomPairs) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const Rational a = oracle::random_rational(rng, -1000, 1000, 1 + static_cast<long>(rng() % 5000));
    const Rational b = oracle::random_rational(rng, -1000, 1000, 1 + static_cast<long>(rng() % 5000));
    const Rational c = oracle::random_rational(rng, -10, 10, 1 + static_cast<long>(rng() % 50));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
    // order agrees with cross-multiplication of the reduced forms
    const mpz_class lhs = a.numerator() * b.denominator();
    const mpz_class rhs = b.numerator() * a.denominator();
    ASSERT_EQ(a < b, lhs < rhs);
    ASSERT_EQ(a == b, lhs == rhs);
    ASSERT_GT(a.denominator(), 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    ASSERT_EQ(g, 1);
  }
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(q(9, 4).exact_sqrt(), q(3, 2));
  EXPECT_FALSE(Rational(2).exact_sqrt().has_value());
  EXPECT_FALSE(Rational(-4).exact_sqrt().has_value());
  EXPECT_EQ(Rational(0).exact_sqrt(), Rational(0));
}

TEST(Surd, NormalizesPerfectSquares) {
  const Surd s(Rational(1), Rational(2), Rational(9));
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s.as_rational(), Rational(7));
  EXPECT_TRUE(Surd::sqrt(q(16, 25)).is_rational());
  EXPECT_FALSE(Surd::sqrt(Rational(2)).is_rational());
  EXPECT_THROW(Surd::sqrt(Rational(2)).as_rational(), std::domain_error);
}

TEST(Surd, SignByCases) {
  // 3 - 2 sqrt(2) > 0, 1 - sqrt(2) < 0, -3 + 2 sqrt(3) > 0
  EXPECT_EQ(Surd(Rational(3), Rational(-2), Rational(2)).sign(), 1);
  EXPECT_EQ(Surd(Rational(1), Rational(-1), Rational(2)).sign(), -1);
  EXPECT_EQ(Surd(Rational(-3), Rational(2), Rational(3)).sign(), 1);
  EXPECT_EQ(surd_sign(Rational(0), Rational(0), Rational(5)), 0);
  EXPECT_THROW(surd_sign(Rational(1), Rational(1), Rational(-1)), std::domain_error);
}

TEST(Surd, Arithmetic) {
  const Surd r2 = Surd::sqrt(Rational(2));
  EXPECT_EQ(r2 * r2, Surd(Rational(2)));
  const Surd x = Surd(Rational(1)) + r2;  // 1 + sqrt2
  const Surd y = Surd(Rational(-1)) + r2;  // sqrt2 - 1
  EXPECT_EQ(x * y, Surd(Rational(1)));
  EXPECT_EQ((x - y), Surd(Rational(2)));
  EXPECT_EQ(r2 + Surd::sqrt(Rational(8)), Surd(Rational(0), Rational(3), Rational(2)));
  EXPECT_THROW(r2 + Surd::sqrt(Rational(3)), std::domain_error);
  EXPECT_LT(y, x);
  EXPECT_EQ((x / Rational(2)).to_double(), (1 + std::sqrt(2.0)) / 2);
}

TEST(Surd, SignLawsOnRandomValues) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    const Rational a = oracle::random_rational(rng, -20, 20, 1 + static_cast<long>(rng() % 40));
    const Rational b = oracle::random_rational(rng, -20, 20, 1 + static_cast<long>(rng() % 40));
    const Rational r = oracle::random_rational(rng, 0, 30, 1 + static_cast<long>(rng() % 12));
    const Surd s(a, b, r);
    ASSERT_EQ((-s).sign(), -s.sign());
    ASSERT_EQ((s * s).sign() >= 0, true);
    ASSERT_EQ(s.sign(), float_sign({{a, Rational(1)}, {b, r}}));
  }
}

TEST(RootTerm, SignOfSumMatchesHighPrecision) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 5000; ++i) {
    std::vector<RootTerm> terms;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < count; ++t) {
      terms.push_back({oracle::random_rational(rng, -9, 9, 1 + static_cast<long>(rng() % 9)),
                       oracle::random_rational(rng, 0, 12, 1 + static_cast<long>(rng() % 6))});
    }
    ASSERT_EQ(sign_of_sum(terms), float_sign(terms));
  }
}

TEST(RootTerm, SignOfSumExactCancellations) {
  const RootTerm a[] = {{Rational(1), Rational(8)}, {Rational(-2), Rational(2)}};
  EXPECT_EQ(sign_of_sum(a), 0);
  const RootTerm b[] = {{Rational(2), Rational(3)}, {Rational(-1), Rational(12)}, {Rational(0), Rational(5)}};
  EXPECT_EQ(sign_of_sum(b), 0);
  const RootTerm c[] = {{Rational(1), Rational(2)}, {Rational(1), Rational(3)}, {Rational(-1), Rational(10)}};
  EXPECT_EQ(sign_of_sum(c), -1);  // 3.1463 < 3.1623
  const RootTerm too_many[] = {{Rational(1), Rational(2)}, {Rational(1), Rational(3)},
                               {Rational(1), Rational(5)}, {Rational(1), Rational(7)}};
  EXPECT_THROW(sign_of_sum(too_many), std::invalid_argument);
}

TEST(RootTerm, CompareDistance) {
  const RootTerm ref{q(-288, 10000), Rational(1)};
  const RootTerm near{q(-3, 100), Rational(1)};
  const RootTerm far{Rational(0), Rational(1)};
  EXPECT_TRUE(compare_distance(near, far, ref) < 0);
  EXPECT_TRUE(compare_distance(far, near, ref) > 0);
  // equidistant on opposite sides
  const RootTerm lo{Rational(1), Rational(2)};
  const RootTerm hi{Rational(3), Rational(2)};
  EXPECT_TRUE(compare_distance(lo, hi, RootTerm{Rational(2), Rational(2)}) == 0);
  EXPECT_EQ(compare(lo, hi), std::strong_ordering::less);
}
