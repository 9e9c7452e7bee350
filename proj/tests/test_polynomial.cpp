#include <gtest/gtest.h>

#include <random>
#include <tuple>

#include "sclosure/field.hpp"
#include "sclosure/polynomial.hpp"
#include "sclosure/repro.hpp"

using namespace sclosure;

namespace {

template <class Field>
SparsePolynomial<typename Field::value_type> poly(const Field& field, std::initializer_list<std::tuple<long, Int, Int>> terms) {
  SparsePolynomial<typename Field::value_type> p;
  for (auto [c, x, y] : terms) p.add_term(Exponent(x, y), field(mpz_class(c), mpz_class(1)));
  return p;
}

template <class Field>
SparsePolynomial<typename Field::value_type> xi(const Field& f) {
  return poly(f, {{1, 4, 1}, {-1, 3, 2}, {1, 2, 3}, {1, 8, 2}, {-1, 7, 3}});
}

template <class Field>
SparsePolynomial<typename Field::value_type> x_of(const Field& f) {
  return poly(f, {{1, 1, 4}, {1, 0, 5}});
}

// Expected x * xi^2, expanded independently term by term. The coefficient of
// X^9 Y^11 is -2.
template <class Field>
SparsePolynomial<typename Field::value_type> x_xi_squared(const Field& f) {
  return poly(f, {{1, 9, 6},   {-1, 8, 7},  {1, 7, 8},    {2, 13, 7},  {-2, 12, 8},  {1, 17, 8},  {-1, 16, 9},
                  {1, 6, 9},   {-1, 5, 10}, {1, 4, 11},   {2, 10, 10}, {-2, 9, 11},  {-1, 15, 10}, {1, 14, 11}});
}

template <class F>
SparsePolynomial<F> random_poly(std::mt19937_64& rng, const std::function<F(long)>& coeff, int terms) {
  std::uniform_int_distribution<Int> e(0, 6);
  std::uniform_int_distribution<long> c(-5, 5);
  SparsePolynomial<F> p;
  for (int i = 0; i < terms; ++i) p.add_term(Exponent(e(rng), e(rng)), coeff(c(rng)));
  return p;
}

}  // namespace

TEST(Fields, RationalArithmetic) {
  RationalField q;
  Rational a = q(1, 2), b = q(-3, 4);
  EXPECT_EQ((a + b).to_string(), "-1/4");
  EXPECT_EQ((a * b).to_string(), "-3/8");
  EXPECT_EQ((a / b).to_string(), "-2/3");
  EXPECT_THROW(a / q(0, 1), Error);
}

TEST(Fields, PrimeArithmetic) {
  PrimeField f(7);
  ModP a = f(3, 1), b = f(5, 1);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a / b).value(), 2u);
  EXPECT_EQ(f(1, 2).value(), 4u);
  EXPECT_EQ((-a).value(), 4u);
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(f(1, 7), Error);
}

TEST(Polynomial, ArithmeticAndLeadingTerm) {
  RationalField q;
  auto p = poly(q, {{1, 1, 4}, {1, 0, 5}});
  EXPECT_EQ(p.leading().first, Exponent(1, 4));
  auto sq = p * p;
  EXPECT_EQ(sq, poly(q, {{1, 2, 8}, {2, 1, 9}, {1, 0, 10}}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p + (-p), SparsePolynomial<Rational>());
}

TEST(Polynomial, WitnessProductRational) {
  RationalField q;
  EXPECT_EQ(x_of(q) * xi(q), poly(q, {{1, 5, 5}, {1, 9, 6}, {1, 2, 8}, {-1, 7, 8}}));
  EXPECT_EQ(x_of(q) * xi(q) * xi(q), x_xi_squared(q));
  auto y = x_of(q) * xi(q);
  auto quotient = exact_divide(y * y, x_of(q));
  ASSERT_TRUE(quotient.has_value());
  EXPECT_EQ(*quotient, x_xi_squared(q));
}

TEST(Polynomial, WitnessProductCharacteristicTwo) {
  PrimeField f2(2);
  auto q = exact_divide((x_of(f2) * xi(f2)) * (x_of(f2) * xi(f2)), x_of(f2));
  ASSERT_TRUE(q.has_value());
  // the even coefficients vanish
  EXPECT_EQ(q->size(), 10u);
  EXPECT_FALSE(q->coefficient(Exponent(13, 7)).has_value());
  EXPECT_TRUE(q->coefficient(Exponent(8, 7)).has_value());
  EXPECT_EQ(*q, x_xi_squared(f2));
}

TEST(Polynomial, ExactDivideRejects) {
  RationalField q;
  auto x = poly(q, {{1, 1, 0}});
  auto y = poly(q, {{1, 0, 1}});
  EXPECT_FALSE(exact_divide(x, y).has_value());
  EXPECT_FALSE(exact_divide(x * x + y, x).has_value());
  try {
    exact_divide(x, SparsePolynomial<Rational>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  auto z = exact_divide(SparsePolynomial<Rational>(), x);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->is_zero());
}

TEST(Polynomial, ExactDivideRoundTripRational) {
  std::mt19937_64 rng(61);
  std::function<Rational(long)> c = [](long v) { return Rational(v); };
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly<Rational>(rng, c, 4);
    auto b = random_poly<Rational>(rng, c, 3);
    if (b.is_zero()) continue;
    auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value());
    ASSERT_EQ(*q, a);
    // adding a term below every divisor multiple breaks divisibility unless
    // it happens to be a multiple itself
    auto r = a * b + SparsePolynomial<Rational>::monomial(Exponent(0, 0), Rational(1));
    auto qr = exact_divide(r, b);
    if (qr) {
      ASSERT_EQ(*qr * b, r);
    }
  }
}

TEST(Polynomial, ExactDivideRoundTripModP) {
  std::mt19937_64 rng(62);
  for (std::uint32_t p : {2u, 3u, 101u}) {
    std::function<ModP(long)> c = [p](long v) { return ModP(v, p); };
    for (int t = 0; t < 100; ++t) {
      auto a = random_poly<ModP>(rng, c, 4);
      auto b = random_poly<ModP>(rng, c, 3);
      if (b.is_zero()) continue;
      auto q = exact_divide(a * b, b);
      ASSERT_TRUE(q.has_value());
      ASSERT_EQ(*q, a);
    }
  }
}

TEST(Polynomial, SupportInSaturation) {
  RationalField q;
  auto sat = saturation(veronese_family(5));
  EXPECT_TRUE(support_in_saturation(xi(q), sat));
  EXPECT_FALSE(support_in_saturation(poly(q, {{1, 4, 1}, {1, 1, 1}}), sat));
}

TEST(Polynomial, Printing) {
  RationalField q;
  EXPECT_EQ(poly(q, {{1, 1, 4}, {-2, 0, 5}}).to_string().empty(), false);
  EXPECT_EQ(SparsePolynomial<Rational>().to_string(), "0");
}
