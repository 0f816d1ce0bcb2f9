#include <gtest/gtest.h>

#include "skein/constants.hpp"
#include "skein/flat.hpp"
#include "skein/multipoly.hpp"
#include "skein/roots.hpp"

#include <random>

using namespace skein;

namespace {

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
  return m;
}

// Leibniz expansion as an independent determinant oracle.
Rational leibniz(const Matrix<Rational>& m) {
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Rational total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    Rational term(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using MP = MultiPoly;

}  // namespace

TEST(Matrix, DeterminantsAgreeWithLeibniz) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      auto m = random_matrix(rng, n);
      EXPECT_EQ(det(m), leibniz(m));
      EXPECT_EQ(det_berkowitz(m), leibniz(m));
    }
}

TEST(Matrix, CharpolyCayleyHamilton) {
  std::mt19937 rng(12);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto m = random_matrix(rng, n);
    auto c = charpoly(m);
    ASSERT_EQ(c.degree(), static_cast<int>(n));
    Matrix<Rational> acc(n, n), pw = Matrix<Rational>::identity(n);
    for (int k = 0; k <= c.degree(); ++k) {
      acc = acc + pw.map([&](const Rational& x) { return x * c.coeff(k); });
      pw = pw * m;
    }
    EXPECT_TRUE(is_zero(acc));
    EXPECT_EQ(c.coeff(0), (n % 2 ? Rational(-1) : Rational(1)) * det(m));
  }
}

TEST(Matrix, CharpolyOverLaurentRing) {
  Matrix<LaurentPoly> m{{LaurentPoly::A(1), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly::A(-1)}};
  auto c = charpoly(m);
  EXPECT_EQ(c.coeff(0), LaurentPoly(0));
  EXPECT_EQ(c.coeff(1), -(LaurentPoly::A(1) + LaurentPoly::A(-1)));
}

TEST(Matrix, InverseAndKronecker) {
  std::mt19937 rng(13);
  auto a = random_matrix(rng, 3), b = random_matrix(rng, 2);
  if (!is_zero(det(a))) EXPECT_EQ(a * inverse(a), Matrix<Rational>::identity(3));
  auto k = kronecker(a, b);
  EXPECT_EQ(k.rows(), 6u);
  EXPECT_EQ(det(k), det(a) * det(a) * det(b) * det(b) * det(b));
}

TEST(Flat, CharpolyFactorsThroughFlatPart) {
  std::mt19937 rng(14);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    // Products of a random matrix with a rank-deficient one give nilpotent parts.
    auto m = random_matrix(rng, n);
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = Rational(0);
    m = m * random_matrix(rng, n);
    auto fp = flat_decompose(m);
    RingPoly<Rational> xk = RingPoly<Rational>::monomial(static_cast<int>(n - fp.rank), Rational(1));
    EXPECT_EQ(xk * fp.gamma, charpoly(m));
    if (fp.rank) EXPECT_FALSE(is_zero(det(fp.flat)));
    EXPECT_EQ(normalized_charpoly(m), fp.gamma);
  }
}

TEST(Flat, SimilarityInvariantsUnderConjugation) {
  std::mt19937 rng(15);
  Matrix<Rational> m{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}};
  auto base = similarity_invariants(m);
  for (int t = 0; t < 20; ++t) {
    auto s = random_matrix(rng, 4);
    if (is_zero(det(s))) continue;
    EXPECT_EQ(similarity_invariants(inverse(s) * m * s), base);
  }
  ASSERT_EQ(base.size(), 2u);
  EXPECT_EQ(base[0], RingPoly<Rational>(std::vector<Rational>{-2, 1}));
}

TEST(Flat, MatrixPeriod) {
  Matrix<Rational> rot{{0, -1}, {1, -1}};  // order three
  auto per = matrix_period(rot, 20, true);
  ASSERT_TRUE(per.has_value());
  EXPECT_EQ(per->period, 3u);
}

TEST(Poly, NewtonPowerSumsMatchTraces) {
  std::mt19937 rng(16);
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(rng, 4, -2, 2);
    auto s = power_sums(charpoly(m), 8);
    for (unsigned d = 1; d <= 8; ++d) EXPECT_EQ(s[d], trace_power(m, d)) << d;
  }
}

TEST(Poly, GcdAndSquarefree) {
  using P = RingPoly<Rational>;
  P a(std::vector<Rational>{-1, 0, 1});  // x^2 - 1
  P b(std::vector<Rational>{1, 1});      // x + 1
  EXPECT_EQ(poly_gcd(a, b), b);
  auto sf = squarefree_factorization(a * b);
  ASSERT_EQ(sf.size(), 2u);
}

TEST(Roots, TensorProductMatchesRootProducts) {
  // Roots of p (x) q are all products of roots of p and of q.
  RingPoly<CycloElem> p(std::vector<CycloElem>{CycloElem(2), CycloElem(-3), CycloElem(1)});  // roots 1, 2
  RingPoly<CycloElem> q(std::vector<CycloElem>{CycloElem(-3), CycloElem(1)});               // root 3
  auto t = tensor_product(p, q);
  RingPoly<CycloElem> want(std::vector<CycloElem>{CycloElem(18), CycloElem(-9), CycloElem(1)});
  EXPECT_EQ(t, want);
}

TEST(Roots, NumericRootsAndPeriodicity) {
  const int p = 5;
  RingPoly<CycloElem> f(std::vector<CycloElem>{CycloElem(1).at_level(p), -(CycloElem::A(p) + CycloElem::A(p, -1)),
                                                CycloElem(1).at_level(p)});
  auto r = numeric_roots(f);
  ASSERT_EQ(r.size(), 2u);
  for (auto z : r) EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
  auto per = root_periodicity(f);
  ASSERT_TRUE(per.has_value());
  EXPECT_EQ(*per, 10);
  EXPECT_EQ(roots_detail::euler_phi(30), 8);
}

TEST(TensorProduct, ComposedProductIdentities) {
  MP a0 = MP::var(0), a1 = MP::var(1), b0 = MP::var(2), b1 = MP::var(3);
  RingPoly<MP> l1(std::vector<MP>{a0, MP(1)}), l2(std::vector<MP>{a0, a1, MP(1)});
  RingPoly<MP> m1(std::vector<MP>{b0, MP(1)}), m2(std::vector<MP>{b0, b1, MP(1)});
  EXPECT_EQ(tensor_product(l1, m1), RingPoly<MP>(std::vector<MP>{-(a0 * b0), MP(1)}));
  EXPECT_EQ(tensor_product(l1, m2), RingPoly<MP>(std::vector<MP>{a0 * a0 * b0, -(a0 * b1), MP(1)}));
  EXPECT_EQ(tensor_product(l2, m2),
            RingPoly<MP>(std::vector<MP>{a0 * a0 * b0 * b0, -(a0 * a1 * b0 * b1),
                                         a0 * b1 * b1 + a1 * a1 * b0 - MP(2) * a0 * b0, -(a1 * b1), MP(1)}));
}

TEST(TensorProduct, SymmetricInArguments) {
  MP a0 = MP::var(0), a1 = MP::var(1), b0 = MP::var(2), b1 = MP::var(3);
  RingPoly<MP> l2(std::vector<MP>{a0, a1, MP(1)}), m2(std::vector<MP>{b0, b1, MP(1)});
  EXPECT_EQ(tensor_product(l2, m2), tensor_product(m2, l2));
}
