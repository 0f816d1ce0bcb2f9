#include <gtest/gtest.h>

#include "skein/golden.hpp"

#include <Eigen/Dense>

#include <cstdlib>

using namespace skein;

namespace {

KnotPtr U() { return KnotRef::atlas("U"); }

// Numeric Tristram-Levine signature summed over the nontrivial d-th roots of unity.
int numeric_d_signature(const SeifertData& s, int d) {
  std::size_t n = s.size();
  int total = 0;
  for (int i = 1; i < d; ++i) {
    std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi * i / d);
    Eigen::MatrixXcd h(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            (1.0 - w) * static_cast<double>(s.V[a][b]) + (1.0 - std::conj(w)) * static_cast<double>(s.V[b][a]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    for (auto e : es.eigenvalues()) total += e > 1e-9 ? 1 : e < -1e-9 ? -1 : 0;
  }
  return total;
}

void expect_suite(const std::string& name) {
  for (auto& c : golden_suite(name)) EXPECT_TRUE(c.pass) << name << ": " << c.name << " " << c.detail;
}

}  // namespace

TEST(Colors, Ranges) {
  ColorData c5(5), c8(8), c2(2);
  EXPECT_EQ(c5.q, 4);
  EXPECT_EQ(c8.q, 3);
  EXPECT_EQ(c2.q, 2);
  EXPECT_EQ(c5.good_colors(), (std::vector<int>{0, 2}));
  EXPECT_EQ(c8.good_colors(), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(c5.small(2, 2, 2));
  EXPECT_FALSE(c5.small(3, 3, 2));
  EXPECT_THROW(ColorData(0), ValidationError);
}

TEST(Specialization, OrdinaryClosedFormMatchesDeterminant) {
  for (int p = 1; p <= 16; ++p)
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(ordinary(p, n), ordinary_by_determinant(p, n)) << p << " " << n;
}

TEST(Specialization, TangleErrors) {
  auto w = SliceWord::parse("2n=4; cross+ 2; cross+ 2; cross- 1; cross+ 3");
  EXPECT_THROW(tangle_invariant(w, 6), UnsupportedSpecialization);
  EXPECT_NO_THROW(tangle_invariant(w, 10));
  EXPECT_THROW(tangle_invariant(SliceWord::parse("2n=0; cup 1; cap 1")), ValidationError);
}

TEST(Specialization, TangleMatchesSpecializedGamma) {
  auto w = SliceWord::parse("2n=4; cross+ 2; cross+ 2; cross- 1; cross+ 3; cross- 2");
  auto t = tangle_invariant(w, 7);
  ASSERT_TRUE(t.specialized.has_value());
  std::vector<CycloElem> c;
  for (auto& x : t.gamma.coeffs()) c.push_back(CycloElem(7, x));
  EXPECT_EQ(t.specialized->gamma, RingPoly<CycloElem>(std::move(c)));
  EXPECT_EQ(t.trace, t.Q.trace());
}

TEST(Tangle, WrappingBounds) {
  auto w = SliceWord::parse("2n=4; cross+ 2; cross- 1; cross+ 3; cross+ 2");
  auto t = tangle_invariant(w);
  if (t.wrapping) EXPECT_EQ(*t.wrapping, 4);
  EXPECT_GE(catalan(t.wrapping_lower_bound / 2), t.gamma.degree());
  auto id = tangle_invariant(SliceWord(2, {}));
  EXPECT_FALSE(id.wrapping.has_value());
}

TEST(Doubles, ClosedFormAgreesWithGeneralPathAtFive) {
  for (const char* j : {"U", "RT", "F8", "LT"})
    for (int k = -2; k <= 4; ++k) {
      auto J = KnotRef::parse(j);
      auto a = make_invariant(5, double_matrix(*J, k, 5)).gamma;
      auto b = make_invariant(5, double_matrix_general(*J, k, 5)).gamma;
      EXPECT_EQ(a, b) << j << " k=" << k;
    }
}

TEST(Doubles, TensorSplitAgreesWithGeneralPath) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(make_invariant(6, double_matrix(*U(), k, 6)).gamma, make_invariant(6, double_matrix_general(*U(), k, 6)).gamma)
        << k;
    EXPECT_EQ(make_invariant(10, double_matrix(*U(), k, 10)).gamma,
              make_invariant(10, double_matrix_general(*U(), k, 10)).gamma)
        << k;
  }
}

TEST(Doubles, TrivialLevels) {
  for (int p : {1, 3, 4}) {
    auto z = double_invariant(*KnotRef::atlas("RT"), 2, p);
    EXPECT_EQ(z.gamma.degree(), 1) << p;
  }
}

TEST(Doubles, PeriodicInTwist) {
  for (int p : {5, 7})
    for (int k = 0; k < p; ++k) EXPECT_EQ(double_invariant(*U(), k, p).gamma, double_invariant(*U(), k + p, p).gamma);
}

TEST(Doubles, MirrorConjugatesGamma) {
  for (const char* K : {"RT", "F8", "6_1", "D(2,RT)"}) {
    auto a = knot_invariant(*KnotRef::parse(K), 5).gamma;
    auto b = knot_invariant(*KnotRef::mirror_of(KnotRef::parse(K)), 5).gamma;
    std::vector<CycloElem> c;
    for (auto& x : a.coeffs()) c.push_back(x.bar());
    EXPECT_EQ(b, RingPoly<CycloElem>(std::move(c))) << K;
  }
}

TEST(Doubles, EigenvaluesAreRootsOfGamma) {
  auto z = knot_invariant(*KnotRef::parse("RT#F8"), 5);
  ASSERT_EQ(z.eigen.size(), static_cast<std::size_t>(z.gamma.degree()));
  for (auto e : z.eigen) {
    std::complex<double> v = 0;
    for (int k = z.gamma.degree(); k >= 0; --k) v = v * e + z.gamma.coeff(k).embed();
    EXPECT_NEAR(std::abs(v), 0.0, 1e-8);
  }
}

TEST(Doubles, ErrorsAreTyped) {
  EXPECT_THROW(knot_invariant(*KnotRef::parse("RT#LT"), 2), UnsupportedSpecialization);
  EXPECT_THROW(colored_double_invariant(*KnotRef::atlas("RT"), 1, 7, 2), UnsupportedSpecialization);
  EXPECT_THROW(colored_double_invariant(*U(), 1, 5, 7), ValidationError);
}

TEST(Sums, UnknotIsNeutral) {
  for (int p : {5, 7})
    EXPECT_EQ(knot_invariant(*KnotRef::parse("RT#U"), p).gamma, knot_invariant(*KnotRef::atlas("RT"), p).gamma);
}

TEST(Sums, ColorZeroBlockIsTensorOfSummands) {
  // Color 0 contributes the Kronecker product, color 2 one more dimension.
  auto a = knot_invariant(*KnotRef::atlas("RT"), 5).gamma, b = knot_invariant(*KnotRef::atlas("F8"), 5).gamma;
  auto g = knot_invariant(*KnotRef::parse("RT#F8"), 5).gamma;
  auto [q, r] = divmod(g, tensor_product(a, b));
  EXPECT_TRUE(is_zero(r));
  EXPECT_EQ(q.degree(), 1);
}

TEST(Colored, ColorZeroIsUncolored) {
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(colored_double_invariant(*U(), k, 7, 0).gamma, double_invariant(*U(), k, 7).gamma) << k;
}

TEST(Covers, SeriesStartsWithRank) {
  auto z = knot_invariant(*KnotRef::atlas("F8"), 5);
  auto s = cover_series(z, 3);
  EXPECT_EQ(s[0], CycloElem(static_cast<int>(z.flat_rank)));
  EXPECT_EQ(s[1], z.flat.trace());
}

TEST(Covers, P5ClosedFormIsTrace) {
  for (int k = -2; k <= 4; ++k)
    EXPECT_EQ(cover_p5_closed(*U(), k), cover_series(double_invariant(*U(), k, 5), 1)[1]) << k;
}

TEST(Covers, TenFromFive) {
  for (int k = -1; k <= 2; ++k) {
    auto s5 = cover_series(double_invariant(*U(), k, 5), 12);
    auto s10 = cover_series(double_invariant(*U(), k, 10), 12);
    for (int d = 1; d <= 12; ++d)
      EXPECT_EQ(s10[static_cast<std::size_t>(d)], cover_p10_from_p5(k, d, s5[static_cast<std::size_t>(d)])) << k << " " << d;
  }
}

TEST(Covers, FiberedBound) {
  auto s = cover_series(knot_invariant(*KnotRef::atlas("RT"), 5), 60);
  for (int d = 1; d <= 60; ++d) EXPECT_LE(std::abs(s[static_cast<std::size_t>(d)].embed()), 2.0 + 1e-9) << d;
}

TEST(Branched, TrivialLevelThree) {
  for (const char* K : {"RT", "F8", "6_1"}) EXPECT_EQ(branched_value(*KnotRef::parse(K), 3, 4), CycloElem(-1)) << K;
}

TEST(Branched, BrieskornPeriod) {
  auto b = brieskorn_series(5, 45);
  for (int c = 1; c <= 15; ++c) EXPECT_EQ(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(c + 30)]) << c;
  EXPECT_EQ(brieskorn_value(7, 5), b[7]);
}

TEST(Signatures, ExactMatchesNumeric) {
  for (const char* K : {"RT", "LT", "F8", "6_1", "8_1", "RT#LT", "RT#RT", "D(-3,U)"}) {
    auto s = seifert_matrix(*KnotRef::parse(K));
    for (int d = 2; d <= 12; ++d) {
      if (d_signature_degenerate(s, d)) continue;
      EXPECT_EQ(d_signature(s, d), numeric_d_signature(s, d)) << K << " d=" << d;
    }
  }
}

TEST(Signatures, TrefoilValues) {
  auto s = seifert_matrix(*KnotRef::atlas("RT"));
  EXPECT_EQ(d_signature(s, 2), -2);
  EXPECT_EQ(d_signature(s, 6), -8);  // two degenerate roots, each counted as the average -1
  EXPECT_EQ(d_signature(s, 7), -8);
  EXPECT_TRUE(d_signature_degenerate(s, 6));
  EXPECT_EQ(d_signature(seifert_matrix(*KnotRef::atlas("LT")), 2), 2);
}

TEST(CrossChecks, Tau5FromTenAndFive) {
  for (int k : {-1, 1, 2, 3})
    for (int d = 1; d <= 6; ++d) {
      auto c = tau5_compare(k, d);
      EXPECT_NEAR(std::abs(c.lhs - c.rhs), 0.0, 1e-8) << k << " " << d;
    }
}

TEST(CrossChecks, TweenieDegrees) {
  auto K = KnotRef::parse("-D(2,U)");
  for (int r = 3; r <= 6; ++r) EXPECT_LT(knot_invariant(*K, 2 * r).gamma.degree(), r - 1) << r;
}

TEST(Parallel, OrderAndThreadsVariable) {
  setenv("SKEIN_THREADS", "3", 1);
  auto v = parallel_map<int>(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  setenv("SKEIN_THREADS", "zero", 1);
  EXPECT_THROW(worker_count(), ValidationError);
  unsetenv("SKEIN_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

TEST(Golden, UnknotDoublesAtFive) { expect_suite("prop510"); }
TEST(Golden, Gamma5Tables) { expect_suite("gamma5-tables"); }
TEST(Golden, P2P6) { expect_suite("p2p6"); }
TEST(Golden, TensorProductSpotValues) { expect_suite("tensor512"); }
TEST(Golden, CoversRT) { expect_suite("covers-rt"); }
TEST(Golden, CoversEightOne) { expect_suite("covers-81"); }
TEST(Golden, ColoredDoubles) { expect_suite("colored75"); }
TEST(Golden, ColoredEigenvalues) { expect_suite("eigen76"); }
TEST(Golden, BranchedCovers) { expect_suite("branched8"); }
TEST(Golden, WittenMatrices) { expect_suite("witten11"); }
TEST(Golden, ComposedProducts) { expect_suite("appendixA"); }

TEST(Golden, UnknownSuite) { EXPECT_THROW(golden_suite("nope"), ValidationError); }
