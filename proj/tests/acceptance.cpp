// Acceptance runner: one pass/fail line per criterion, exit status 0 iff all pass.

#include "skein/golden.hpp"
#include "support.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>

using namespace skein;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  }
  void suite(const std::vector<GoldenCheck>& checks) {
    for (auto& c : checks) require(c.pass, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

// Wall-clock budgets in seconds.
struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<void(Outcome&)> body;
};

std::optional<SliceWord> example45_word() {
  auto path = skein_test::corpus_path("example45.sw");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return SliceWord::parse(read_file(path));
}

void c1(Outcome& o) { o.suite(golden_suite("example45", example45_word())); }

void c2(Outcome& o) {
  o.suite(golden_suite("appendixA"));
  o.suite(golden_suite("tensor512"));
}

void c3(Outcome& o) { o.suite(golden_suite("prop510")); }
void c4(Outcome& o) { o.suite(golden_suite("gamma5-tables")); }
void c5(Outcome& o) { o.suite(golden_suite("p2p6")); }

void c6(Outcome& o) {
  o.suite(golden_suite("covers-rt"));
  o.suite(golden_suite("covers-81"));
}

void c7(Outcome& o) {
  o.suite(golden_suite("colored75"));
  o.suite(golden_suite("eigen76"));
}

void c8(Outcome& o) { o.suite(golden_suite("branched8")); }
void c9(Outcome& o) { o.suite(golden_suite("witten11")); }

// Smallest period of s[1..] that is confirmed over the whole window.
long series_period(const std::vector<CycloElem>& s) {
  long n = static_cast<long>(s.size()) - 1;
  for (long t = 1; t < n; ++t) {
    bool ok = true;
    for (long d = 1; d + t <= n && ok; ++d) ok = s[static_cast<std::size_t>(d)] == s[static_cast<std::size_t>(d + t)];
    if (ok) return t;
  }
  return 0;
}

void c10(Outcome& o) {
  for (int p : {5, 7, 8}) {
    auto U = KnotRef::atlas("U");
    for (int k = 0; k + p <= 2 * p; ++k) {
      auto a = double_invariant(*U, k, p).gamma, b = double_invariant(*U, k + p, p).gamma;
      o.require(a == b, "Gamma_" + std::to_string(p) + " at k=" + std::to_string(k) + " vs k+p");
    }
  }
  auto f8 = branched_series(*KnotRef::atlas("F8"), 5, 90);
  auto rt = branched_series(*KnotRef::atlas("RT"), 5, 90);
  long pf = series_period(f8), pr = series_period(rt);
  o.require(pf == 10, "F8 branched period " + std::to_string(pf));
  o.require(pr == 30, "RT branched period " + std::to_string(pr));
  auto br = brieskorn_series(5, 70);
  for (int c = 1; c <= 40; ++c)
    o.require(br[static_cast<std::size_t>(c)] == br[static_cast<std::size_t>(c + 30)], "Brieskorn c=" + std::to_string(c));
}

void c11(Outcome& o) {
  std::mt19937 rng(20261016);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 3;
    auto w = skein_test::random_word(rng, n, 4 + t % 9);
    o.require(closure_matrix_by_diagrams(w) == transfer_matrix_rows(w) * pairing_matrix(n), "Q D(n) = B for " + w.str());
    auto a = tangle_invariant(w);
    std::size_t k = 1 + static_cast<std::size_t>(t) % std::max<std::size_t>(1, w.tokens().size() - 1);
    auto b = tangle_invariant(w.rotate(k));
    o.require(a.D == b.D && a.gamma == b.gamma, "rotation of " + w.str());
  }
  for (auto& e : std::filesystem::directory_iterator(SKEIN_CORPUS_DIR)) {
    auto path = e.path();
    if (path.extension() == ".pd") {
      auto d = PDCode::parse(read_file(path.string()));
      if (d.size() <= 12) o.require(network_bracket(d) == state_sum_bracket(d), "bracket of " + path.filename().string());
    } else if (path.extension() == ".sw") {
      auto w = SliceWord::parse(read_file(path.string()));
      if (!w.closed() || w.crossing_count() > 12) continue;
      auto [xs, loops] = slice_closure(w, Matching{}, Matching{});
      o.require(bracket(w) == state_sum_bracket(xs, loops), "bracket of " + path.filename().string());
    }
  }
  for (int p = 3; p <= 16; ++p)
    for (int n = 1; n <= 4; ++n) o.require(ordinary(p, n) == ordinary_by_determinant(p, n), "ordinarity p=" + std::to_string(p));
  RatFunc delta(loop_value());
  for (int n = 1; n <= 5; ++n) {
    const auto& f = jones_wenzl(n);
    o.require(TLElement<RatFunc>::multiply(f, f, delta) == f, "JW idempotent n=" + std::to_string(n));
    for (int i = 1; i < n; ++i) {
      TLElement<RatFunc> e{n, {}};
      e.add(TLDiagram::generator(n, i), RatFunc(1));
      o.require(TLElement<RatFunc>::multiply(f, e, delta).terms.empty(), "JW annihilation n=" + std::to_string(n));
    }
  }
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        if (admissible(a, b, c)) o.require(theta_generic(a, b, c) == theta_by_network(a, b, c), "theta");
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int e = 0; e <= 4; ++e)
        for (int c = 0; c <= 2; ++c)
          for (int d = 0; d <= 2; ++d)
            for (int f = 0; f <= 4; ++f)
              if (admissible(a, d, e) && admissible(b, c, e) && admissible(a, b, f) && admissible(c, d, f))
                o.require(tet_generic(a, b, e, c, d, f) == tet_by_network(a, b, e, c, d, f), "tet");
}

void c12(Outcome& o) {
  o.require(beta_constant(2) == CycloElem(2, LaurentPoly::parse("1/2 - 1/2*A")), "beta_2");
  o.require(beta_constant(5) == CycloElem(5, LaurentPoly::parse("3/5 - 1/5*A + 4/5*A^2 - 2/5*A^3")), "beta_5");
  o.require(beta_constant(10).inverse() == CycloElem(10, LaurentPoly::parse("-1 - A + A^2 - A^3 - A^4 + 2*A^6")),
            "beta_10 inverse");
  auto s = cover_series(knot_invariant(*KnotRef::atlas("RT"), 5), 60);
  for (int d = 1; d <= 60; ++d)
    o.require(std::abs(s[static_cast<std::size_t>(d)].embed(1)) <= 2.0 + 1e-9, "fibered bound d=" + std::to_string(d));
}

void c13(Outcome& o) {
  auto tweenie = KnotRef::parse("-D(2,U)");
  for (int r = 3; r <= 6; ++r) {
    int deg = knot_invariant(*tweenie, 2 * r).gamma.degree();
    o.require(deg < r - 1, "deg Gamma_" + std::to_string(2 * r) + " = " + std::to_string(deg));
  }
  for (int p : {5, 7}) {
    auto g = knot_invariant(*KnotRef::parse("6_1"), p).gamma;
    o.require(is_zero(g.eval(CycloElem(1).at_level(p))), "1 is a root of Gamma_" + std::to_string(p) + "(6_1)");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "figure tangle invariants", 1, c1},
      {2, "tensor product identities", 1, c2},
      {3, "unknot doubles at p=5", 5, c3},
      {4, "Gamma_5 tables", 120, c4},
      {5, "p=2 and p=6", 1, c5},
      {6, "cyclic covers", 10, c6},
      {7, "colored invariants", 30, c7},
      {8, "branched covers", 60, c8},
      {9, "Witten matrices", 180, c9},
      {10, "periodicity", 120, c10},
      {11, "structural properties", 300, c11},
      {12, "constants and fibered bound", 5, c12},
      {13, "observed properties", 120, c13},
  };
  int failed = 0;
  for (auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.budget, "over time budget");
    failed += !o.pass;
    std::printf("criterion %2d %-30s %s  %.2fs / %.0fs%s%s\n", c.id, c.title, o.pass ? "PASS" : "FAIL", secs, c.budget,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
