#include <gtest/gtest.h>

#include "skein/golden.hpp"
#include "support.hpp"

#include <filesystem>

using namespace skein;

namespace {

// Closure of sigma^n on two strands, worked in TL_2 by hand: sigma = A + A^-1 e, e^2 = delta e.
LaurentPoly two_strand_oracle(int n) {
  LaurentPoly A = LaurentPoly::A(1), Ai = LaurentPoly::A(-1), d = loop_value();
  if (n < 0) std::swap(A, Ai);
  LaurentPoly a(1), b(0);
  for (int i = 0; i < std::abs(n); ++i) {
    LaurentPoly na = A * a, nb = Ai * a + (A + Ai * d) * b;
    a = na;
    b = nb;
  }
  return a * d * d + b * d;
}

}  // namespace

TEST(TemperleyLieb, CatalanCounts) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(static_cast<long>(enumerate_matchings(n).size()), catalan(n)) << n;
  for (auto& m : enumerate_matchings(4)) EXPECT_TRUE(is_noncrossing_matching(m));
}

TEST(TemperleyLieb, PairingMatrixSymmetricWithLoopDiagonal) {
  for (int n = 1; n <= 4; ++n) {
    auto d = pairing_matrix(n);
    EXPECT_EQ(d, d.transpose());
    LaurentPoly dn(1);
    for (int i = 0; i < n; ++i) dn = dn * loop_value();
    for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_EQ(d(i, i), dn);
  }
}

TEST(JonesWenzl, IdempotentAndAnnihilating) {
  RatFunc delta(loop_value());
  for (int n = 1; n <= 5; ++n) {
    const auto& f = jones_wenzl(n);
    EXPECT_EQ(TLElement<RatFunc>::multiply(f, f, delta), f) << n;
    for (int i = 1; i < n; ++i) {
      TLElement<RatFunc> e{n, {}};
      e.add(TLDiagram::generator(n, i), RatFunc(1));
      EXPECT_TRUE(TLElement<RatFunc>::multiply(f, e, delta).terms.empty()) << n << " " << i;
      EXPECT_TRUE(TLElement<RatFunc>::multiply(e, f, delta).terms.empty()) << n << " " << i;
    }
  }
}

TEST(JonesWenzl, TraceIsUnknotColor) {
  RatFunc delta(loop_value());
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(jones_wenzl(n).trace(delta), RatFunc(unknot_value(n))) << n;
}

TEST(Bracket, TwoStrandClosuresMatchHandComputation) {
  for (int n = -6; n <= 6; ++n) {
    std::vector<int> braid(static_cast<std::size_t>(std::abs(n)), n > 0 ? 1 : -1);
    EXPECT_EQ(network_bracket(PDCode::braid_closure(2, braid)), two_strand_oracle(n)) << n;
  }
}

TEST(Bracket, TransferAgreesWithStateSumOnCorpus) {
  int seen = 0;
  for (auto& e : std::filesystem::directory_iterator(SKEIN_CORPUS_DIR)) {
    auto path = e.path();
    if (path.extension() == ".pd") {
      auto d = PDCode::parse(read_file(path.string()));
      if (d.size() > 12) continue;
      EXPECT_EQ(network_bracket(d), state_sum_bracket(d)) << path;
      ++seen;
    } else if (path.extension() == ".sw") {
      auto w = SliceWord::parse(read_file(path.string()));
      if (!w.closed() || w.crossing_count() > 12) continue;
      auto [xs, loops] = slice_closure(w, Matching{}, Matching{});
      EXPECT_EQ(bracket(w), state_sum_bracket(xs, loops)) << path;
      ++seen;
    }
  }
  EXPECT_GE(seen, 10);
}

TEST(Bracket, MirrorConjugates) {
  for (const char* f : {"trefoil.pd", "figure_eight.pd", "three_twist.pd", "braid_3.pd"}) {
    auto d = PDCode::parse(read_file(skein_test::corpus_path(f)));
    EXPECT_EQ(network_bracket(d.mirror()), network_bracket(d).bar()) << f;
  }
  for (int i = 1; i <= 8; ++i) {
    auto w = SliceWord::parse(read_file(skein_test::corpus_path("plat_" + std::to_string(i) + ".sw")));
    EXPECT_EQ(bracket(w.mirror()), bracket(w).bar()) << i;
  }
}

TEST(Bracket, KinkFactor) {
  auto t = PDCode::braid_closure(2, {1, 1, 1});
  auto b = network_bracket(t), up = network_bracket(t.add_kink(1)), down = network_bracket(t.add_kink(-1));
  LaurentPoly m = -LaurentPoly::A(3);
  EXPECT_TRUE(up == b * m || up == b * m.bar());
  EXPECT_EQ(up * down, b * b);
  EXPECT_EQ(network_bracket(t.normalize_writhe()), network_bracket(t) * (up == b * m ? m.bar() : m).pow(3));
}

TEST(Transfer, ClosureMatrixEqualsQTimesPairing) {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 3;
    auto w = skein_test::random_word(rng, n, 4 + t % 9);
    EXPECT_EQ(closure_matrix_by_diagrams(w), transfer_matrix_rows(w) * pairing_matrix(n)) << w.str();
  }
}

TEST(Transfer, CyclicShiftKeepsGammaAndD) {
  std::mt19937 rng(32);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 3;
    auto w = skein_test::random_word(rng, n, 4 + t % 9);
    auto g = normalized_charpoly(transfer_matrix_rows(w));
    for (std::size_t k = 1; k < w.tokens().size(); k += 2) {
      auto r = w.rotate(k);
      if (r.bottom() == 0) continue;
      EXPECT_EQ(normalized_charpoly(transfer_matrix_rows(r)), g) << w.str() << " rotated by " << k;
    }
  }
}

TEST(Transfer, ConcatenationMultiplies) {
  std::mt19937 rng(33);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 3;
    auto a = skein_test::random_word(rng, n, 5), b = skein_test::random_word(rng, n, 5);
    EXPECT_EQ(transfer_matrix_rows(a.then(b)), transfer_matrix_rows(a) * transfer_matrix_rows(b));
  }
}

TEST(Transfer, IdentityTangle) {
  for (int n = 1; n <= 3; ++n) {
    SliceWord id(2 * n, {});
    auto g = normalized_charpoly(transfer_matrix_rows(id));
    RingPoly<LaurentPoly> want(LaurentPoly(1));
    RingPoly<LaurentPoly> lin(std::vector<LaurentPoly>{LaurentPoly(-1), LaurentPoly(1)});
    for (long i = 0; i < catalan(n); ++i) want = want * lin;
    EXPECT_EQ(g, want) << n;
  }
}

TEST(Network, ThetaAndTetClosedForms) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        if (admissible(a, b, c)) EXPECT_EQ(theta_generic(a, b, c), theta_by_network(a, b, c)) << a << b << c;
  int checked = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int e = 0; e <= 4; ++e)
        for (int c = 0; c <= 2; ++c)
          for (int d = 0; d <= 2; ++d)
            for (int f = 0; f <= 4; ++f)
              if (admissible(a, d, e) && admissible(b, c, e) && admissible(a, b, f) && admissible(c, d, f)) {
                EXPECT_EQ(tet_generic(a, b, e, c, d, f), tet_by_network(a, b, e, c, d, f));
                ++checked;
              }
  EXPECT_GT(checked, 20);
}

TEST(KnotScalars, UnknotAndMirror) {
  auto u = knot_scalars(*KnotRef::atlas("U"));
  EXPECT_EQ(u.bracket, loop_value());
  auto rt = knot_scalars(*KnotRef::atlas("RT")), lt = knot_scalars(*KnotRef::atlas("LT"));
  EXPECT_EQ(lt.bracket, rt.bracket.bar());
  EXPECT_EQ(lt.double_bracket, rt.double_bracket.bar());
}

TEST(FigureTangle, ReferenceMatricesAreConsistent) {
  auto e = golden::figure_tangle_data();
  EXPECT_EQ(e.Q * pairing_matrix(2), e.B);
  auto g = normalized_charpoly(e.Q);
  EXPECT_EQ(g.coeff(0), e.D);
  EXPECT_EQ(g.coeff(1), e.g1);
  EXPECT_FALSE(is_zero(det(e.B)));
}
