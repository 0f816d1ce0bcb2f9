#include <gtest/gtest.h>

#include "skein/constants.hpp"
#include "skein/multipoly.hpp"
#include "skein/ratfunc.hpp"

#include <random>

using namespace skein;

namespace {

LaurentPoly random_laurent(std::mt19937& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> c(-3, 3);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e)
    if (int v = c(rng)) p = p + LaurentPoly::monomial(e, Rational(v));
  return p;
}

std::complex<double> eval_at_root(const LaurentPoly& x, int p, int root = 1) {
  return std::complex<double>(x.eval(std::polar(1.0L, std::numbers::pi_v<long double> * root / p)));
}

}  // namespace

TEST(Rational, ArithmeticAndParse) {
  Rational a(3, 4), b = Rational::parse("-5/6");
  EXPECT_EQ(a + b, Rational(-1, 12));
  EXPECT_EQ(a * b, Rational(-5, 8));
  EXPECT_EQ(a / b, Rational(-9, 10));
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(4, 7), Rational(0));
}

TEST(Laurent, ParsePrintRoundTrip) {
  for (const char* s : {"-A^-16 + A^-12 + 2 - 2*A^4 - A^16 + A^20", "1/2 - 1/2*A", "A", "-A^-3", "0"}) {
    auto p = LaurentPoly::parse(s);
    EXPECT_EQ(p.str(), s);
    EXPECT_EQ(LaurentPoly::parse(p.str()), p);
  }
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(Laurent, NegativePowerOfMonomial) {
  auto a = LaurentPoly::monomial(3, Rational(2));
  EXPECT_EQ(a.pow(-2), LaurentPoly::monomial(-6, Rational(1, 4)));
  EXPECT_EQ(a.pow(-2) * a.pow(2), LaurentPoly(1));
}

TEST(Laurent, QuantumIntegers) {
  // [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}), checked numerically at a generic point.
  std::complex<long double> a = std::polar(1.0L, 0.37L);
  for (int n = 1; n <= 8; ++n) {
    auto lhs = qint(n).eval(a);
    auto rhs = (std::pow(a, 2 * n) - std::pow(a, -2 * n)) / (a * a - 1.0L / (a * a));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12) << n;
  }
  EXPECT_EQ(loop_value(), LaurentPoly::parse("-A^-2 - A^2"));
}

TEST(Cyclo, ArithmeticMatchesEmbedding) {
  std::mt19937 rng(2);
  for (int p : {3, 5, 7, 8, 10, 12}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_laurent(rng), b = random_laurent(rng);
      CycloElem x(p, a), y(p, b);
      EXPECT_NEAR(std::abs((x * y).embed() - eval_at_root(a * b, p)), 0.0, 1e-9);
      EXPECT_NEAR(std::abs((x + y).embed() - eval_at_root(a + b, p)), 0.0, 1e-9);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), CycloElem(1).at_level(p));
    }
  }
}

TEST(Cyclo, ReductionIsCanonical) {
  // A^{2p} = 1 and A^p = -1 in k_p.
  for (int p : {5, 7, 10}) {
    EXPECT_EQ(CycloElem::A(p, 2 * p), CycloElem(1).at_level(p));
    EXPECT_EQ(CycloElem::A(p, p), CycloElem(-1).at_level(p));
  }
  EXPECT_EQ(CycloElem::A(5, 4).to_laurent(), LaurentPoly::parse("-1 + A - A^2 + A^3"));
}

TEST(Cyclo, TransferMapsAreHomomorphisms) {
  std::mt19937 rng(3);
  for (int p : {3, 5, 7}) {
    for (int t = 0; t < 10; ++t) {
      CycloElem x(p, random_laurent(rng)), y(p, random_laurent(rng));
      EXPECT_EQ(transfer_j(x * y, p), transfer_j(x, p) * transfer_j(y, p));
      EXPECT_EQ(transfer_j(x + y, p), transfer_j(x, p) + transfer_j(y, p));
    }
    for (int t = 0; t < 10; ++t) {
      CycloElem x(2, random_laurent(rng)), y(2, random_laurent(rng));
      EXPECT_EQ(transfer_i(x * y, p), transfer_i(x, p) * transfer_i(y, p));
    }
  }
}

TEST(Cyclo, TransferExponents) {
  EXPECT_EQ(transfer_i_exponent(5), 25);
  EXPECT_EQ(transfer_j_exponent(5), 6);
  EXPECT_EQ(transfer_j_exponent(3), 10);
  EXPECT_EQ(transfer_i(CycloElem::A(2), 3), CycloElem::A(6, 9));
}

TEST(Cyclo, KappaTextRoundTrip) {
  CycloElem x = CycloElem(5, LaurentPoly::parse("1 - A^2"), 3);
  EXPECT_EQ(CycloElem::parse(x.str()), x);
}

TEST(Constants, ReferenceBetaValues) {
  EXPECT_EQ(beta_constant(2), CycloElem(2, LaurentPoly::parse("1/2 - 1/2*A")));
  EXPECT_EQ(beta_constant(5), CycloElem(5, LaurentPoly::parse("3/5 - 1/5*A + 4/5*A^2 - 2/5*A^3")));
  EXPECT_EQ(beta_constant(10).inverse(), CycloElem(10, LaurentPoly::parse("-1 - A + A^2 - A^3 - A^4 + 2*A^6")));
}

TEST(Constants, EtaIsPositive) {
  // Level three is the exception: eta_3 = -1 under the principal embedding.
  EXPECT_NEAR(eta_constant(3).embed().real(), -1.0, 1e-12);
  for (int p = 4; p <= 16; ++p) {
    auto e = eta_constant(p).embed();
    EXPECT_GT(e.real(), 0) << p;
    EXPECT_NEAR(e.imag(), 0.0, 1e-9) << p;
  }
}

TEST(Constants, OrdinarityRule) {
  EXPECT_TRUE(is_ordinary(10, 2));
  EXPECT_FALSE(is_ordinary(6, 2));
  for (int r = 3; r <= 8; ++r) EXPECT_FALSE(is_ordinary(2 * r, r - 1)) << r;
}

TEST(RatFunc, ReducedForm) {
  RatFunc a(LaurentPoly::parse("A^2 - 1"), LaurentPoly::parse("A - 1"));
  EXPECT_TRUE(a.is_laurent());
  EXPECT_EQ(a.to_laurent(), LaurentPoly::parse("1 + A"));
  RatFunc b = RatFunc(qint(2)) / RatFunc(qint(3));
  EXPECT_EQ(b * RatFunc(qint(3)), RatFunc(qint(2)));
  EXPECT_THROW(RatFunc(1) / RatFunc(0), std::domain_error);
}

TEST(MultiPoly, Arithmetic) {
  MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1);
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ((x * y).str({"x", "y"}), "x*y");
}
