#pragma once

#include "constants.hpp"
#include "flat.hpp"
#include "roots.hpp"
#include "skein.hpp"

#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace skein {

// ---------------------------------------------------------------------------
// Colors at level p.

struct ColorData {
  int p = 0;
  int q = 0;

  explicit ColorData(int level) : p(level) {
    if (p < 1) throw ValidationError("level must be positive");
    if (p <= 2)
      q = 2;
    else if (p % 2 == 0)
      q = (p - 2) / 2;
    else
      q = p - 1;
  }

  bool is_color(int c) const { return c >= 0 && c < q; }
  bool good(int c) const { return is_color(c) && (p % 2 == 0 || c % 2 == 0); }
  bool small(int a, int b, int c) const {
    return is_color(a) && is_color(b) && is_color(c) && admissible(a, b, c) && a + b + c < 2 * q;
  }

  std::vector<int> colors() const {
    std::vector<int> v;
    for (int c = 0; c < q; ++c) v.push_back(c);
    return v;
  }
  std::vector<int> good_colors() const {
    std::vector<int> v;
    for (int c = 0; c < q; ++c)
      if (good(c)) v.push_back(c);
    return v;
  }
  // S(c,p): good i with (i,i,c) small.
  std::vector<int> basis(int c) const {
    std::vector<int> v;
    for (int i = 0; i < q; ++i)
      if (good(i) && small(i, i, c)) v.push_back(i);
    return v;
  }
};

// ---------------------------------------------------------------------------
// Specialization helpers.

inline Matrix<CycloElem> specialize(const Matrix<LaurentPoly>& m, int p) {
  return m.map([p](const LaurentPoly& x) { return CycloElem(p, x); });
}

inline CycloElem specialize(const RatFunc& r, int p) {
  CycloElem den(p, r.den());
  if (den.is_zero()) throw UnsupportedSpecialization("denominator vanishes at p=" + std::to_string(p));
  return CycloElem(p, r.num()) * den.inverse();
}

inline bool ordinary(int p, int n) { return is_ordinary(p, n); }

inline bool ordinary_by_determinant(int p, int n) {
  if (p < 1 || n < 0) throw ValidationError("ordinarity needs p >= 1 and n >= 0");
  if (n == 0) return true;
  return !det(specialize(pairing_matrix(n), p)).is_zero();
}

// kappa^e = u^m kappa^g with e = 6m + g.
inline CycloElem kappa_power(int p, long e) {
  long g = ((e % 6) + 6) % 6;
  long m = (e - g) / 6;
  CycloElem u(p, LaurentPoly::monomial(static_cast<int>(CycloElem::u_exponent(p) * m)));
  return resolve_kappa(u * CycloElem::kappa(p, static_cast<int>(g)));
}

inline std::complex<double> evaluate_at(const CycloElem& x, std::complex<double> a, std::complex<double> kappa) {
  std::complex<double> v = x.to_laurent().eval(a);
  return v * std::pow(kappa, x.grade());
}

// ---------------------------------------------------------------------------
// Invariant record.

template <Field F>
struct TVInvariant {
  int p = 0;
  Matrix<F> matrix;
  Matrix<F> flat;
  RingPoly<F> gamma;
  F D;
  std::size_t flat_rank = 0;
  std::vector<RingPoly<F>> invariant_factors;
  std::vector<std::complex<double>> eigen;
  std::optional<long> period;

  // Trace of the d-th power of the flat part.
  F trace_power(unsigned d) const {
    if (flat_rank == 0) return F(0);
    return skein::trace_power(flat, d);
  }
};

template <Field F>
TVInvariant<F> make_invariant(int p, const Matrix<F>& z) {
  TVInvariant<F> out;
  out.p = p;
  out.matrix = z;
  if (z.rows() == 0) {
    out.flat = Matrix<F>(0, 0);
    out.gamma = RingPoly<F>(F(1));
    out.D = F(1);
    if constexpr (std::is_same_v<F, CycloElem>) out.period = 1;
    return out;
  }
  auto fp = flat_decompose(z);
  out.flat = fp.flat;
  out.flat_rank = fp.rank;
  out.gamma = fp.gamma;
  out.D = fp.gamma.coeff(0);
  if (fp.rank) out.invariant_factors = similarity_invariants(fp.flat);
  if constexpr (std::is_same_v<F, CycloElem>) {
    if (fp.rank) out.eigen = numeric_roots(fp.gamma);
    out.period = root_periodicity(fp.gamma);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tangle invariants in S^1 x S^2.

struct TangleInvariant {
  int n = 0;
  Matrix<LaurentPoly> Q;  // transfer matrix, row convention
  Matrix<LaurentPoly> B;  // closed pairing matrix Q * D(n)
  RingPoly<LaurentPoly> gamma;
  LaurentPoly D;
  LaurentPoly trace;
  std::size_t flat_rank = 0;
  std::optional<int> wrapping;  // exact when forced by det B != 0
  int wrapping_lower_bound = 0;  // least 2m with c(m) >= deg gamma
  std::optional<TVInvariant<CycloElem>> specialized;
};

inline TangleInvariant tangle_invariant(const SliceWord& w, std::optional<int> p = std::nullopt) {
  if (w.bottom() % 2 || w.bottom() == 0) throw ValidationError("tangle invariant needs an even positive strand count");
  TangleInvariant out;
  out.n = w.half_width();
  out.Q = transfer_matrix_rows(w);
  out.B = out.Q * pairing_matrix(out.n);
  out.gamma = normalized_charpoly(out.Q);
  out.D = out.gamma.coeff(0);
  out.trace = out.Q.trace();
  out.flat_rank = static_cast<std::size_t>(std::max(0, out.gamma.degree()));
  if (out.n >= 2 && !is_zero(det(out.B))) out.wrapping = 2 * out.n;
  int m = 0;
  while (catalan(m) < out.gamma.degree()) ++m;
  out.wrapping_lower_bound = 2 * m;
  if (p) {
    if (!is_ordinary(*p, out.n))
      throw UnsupportedSpecialization("p=" + std::to_string(*p) + " is special for n=" + std::to_string(out.n));
    if (CycloElem(*p, out.D).is_zero())
      throw UnsupportedSpecialization("D(L) vanishes at p=" + std::to_string(*p));
    out.specialized = make_invariant(*p, specialize(out.Q, *p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Colored knot brackets <J_c> of 0-framed diagrams.

inline RatFunc colored_knot_bracket(const KnotRef& j, int c) {
  if (c == 0) return RatFunc(1);
  if (j.kind == KnotRef::Kind::Atlas && j.name == "U") return RatFunc(unknot_value(c));
  if (auto name = double_atlas_name(j); name && *name == "U") return RatFunc(unknot_value(c));
  if (c == 1) return RatFunc(knot_scalars(j).bracket);
  if (c == 2) return RatFunc(knot_scalars(j).double_bracket);
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, RatFunc> cache;
  auto key = std::make_pair(j.str(), c);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc out;
  if (j.kind == KnotRef::Kind::Mirror) {
    out = colored_knot_bracket(*j.args.at(0), c).bar();
  } else if (j.kind == KnotRef::Kind::Sum) {
    out = RatFunc(1);
    for (std::size_t k = 0; k < j.args.size(); ++k) {
      out = out * colored_knot_bracket(*j.args[k], c);
      if (k) out = out / RatFunc(unknot_value(c));
    }
  } else {
    auto d = knot_diagram(j);
    if (!d) throw UnsupportedSpecialization("no diagram for colored bracket of " + j.str());
    out = colored_cable(*d, c, 0, 0);
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[key] = out;
  return out;
}

// ---------------------------------------------------------------------------
// Twisted doubles.

namespace tqft_detail {

inline CycloElem at(int p, const LaurentPoly& x) { return CycloElem(p, x); }

inline std::function<CycloElem(int)> qi_at(int p) {
  return [p](int k) { return CycloElem(p, qint(k)); };
}

inline CycloElem divide(const CycloElem& a, const CycloElem& b, const char* what) {
  if (b.is_zero()) throw UnsupportedSpecialization(std::string(what) + " vanishes at p=" + std::to_string(b.level()));
  return a * b.inverse();
}

inline Matrix<CycloElem> scalar(const CycloElem& x) { return Matrix<CycloElem>{{x}}; }

inline Matrix<CycloElem> flat_of(const Matrix<CycloElem>& z) {
  if (z.rows() == 0) return z;
  return flat_decompose(z).flat;
}

inline bool is_unknot(const KnotRef& j) {
  if (j.kind == KnotRef::Kind::Atlas) return j.name == "U";
  auto n = double_atlas_name(j);
  return n && *n == "U";
}

inline Matrix<CycloElem> invert(const Matrix<CycloElem>& l, const char* what) {
  try {
    return inverse(l);
  } catch (const std::domain_error&) {
    throw UnsupportedSpecialization(std::string(what) + " is singular");
  }
}

// p = 5 closed form.
inline Matrix<CycloElem> double_p5(const KnotRef& j, int k) {
  const int p = 5;
  auto s = knot_scalars(j);
  LaurentPoly m = twist_value(1).pow(2 * k + 1);
  CycloElem b = beta_constant(p);
  return Matrix<CycloElem>{{b, b * at(p, s.bracket)},
                           {b * at(p, m * s.bracket), b * at(p, m * s.cable_twisted(k))}};
}

// p = 2 closed form.
inline Matrix<CycloElem> double_p2(const KnotRef& j, int k) {
  const int p = 2;
  auto s = knot_scalars(j);
  LaurentPoly m = twist_value(1).pow(2 * k + 1);
  CycloElem b = beta_constant(p);
  CycloElem inv2d = CycloElem(Rational(1, 2)) * delta_at(p).inverse();
  return Matrix<CycloElem>{{b, b * at(p, s.bracket)},
                           {b * at(p, m * s.bracket) * inv2d, b * at(p, m * s.cable_twisted(k)) * inv2d}};
}

}  // namespace tqft_detail

// Uncolored matrix B(J,k) L(J)^-1 over the colors 0..n(p)-1.
inline Matrix<CycloElem> double_matrix_general(const KnotRef& j, int k, int p) {
  using namespace tqft_detail;
  ColorData cd(p);
  int n = color_bound(p);
  if (n < 1) return scalar(CycloElem(1).at_level(p));
  std::vector<CycloElem> jc(static_cast<std::size_t>(2 * n), CycloElem(0));
  for (int c = 0; c < 2 * n && c < cd.q; ++c) jc[static_cast<std::size_t>(c)] = specialize(colored_knot_bracket(j, c), p);
  for (int c = 0; c < n; ++c)
    if (jc[static_cast<std::size_t>(c)].is_zero())
      throw UnsupportedSpecialization("<" + j.str() + "_" + std::to_string(c) + "> vanishes at p=" + std::to_string(p));
  auto un = static_cast<std::size_t>(n);
  Matrix<CycloElem> s(un, un), cm(un, un);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CycloElem x = CycloElem(0).at_level(p), y = x;
      for (int r = 0; r < cd.q; ++r) {
        if (!cd.small(a, b, r)) continue;
        x += at(p, full_twist(r, a, b) * unknot_value(r));
        y += at(p, full_twist(r, a, b).pow(k)) * jc.at(static_cast<std::size_t>(r));
      }
      s(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = x;
      cm(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = y;
    }
  CycloElem beta = beta_constant(p);
  Matrix<CycloElem> bm(un, un);
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b) {
      CycloElem x = CycloElem(0).at_level(p);
      for (std::size_t t = 0; t < un; ++t)
        x += at(p, twist_value(static_cast<int>(t)).pow(2 * k + 1)) * s(a, t) * cm(b, t);
      bm(a, b) = beta * x;
    }
  return bm * invert(s, "fusion matrix");
}

inline Matrix<CycloElem> double_matrix(const KnotRef& j, int k, int p) {
  using namespace tqft_detail;
  if (p < 1) throw ValidationError("level must be positive");
  if (p == 1 || p == 3 || p == 4) return scalar(CycloElem(1).at_level(p));
  if (p == 2) return double_p2(j, k);
  if (p == 5) return double_p5(j, k);
  if (p % 4 == 2) {
    int o = p / 2;
    auto z2 = flat_of(double_matrix(j, k, 2)).map([o](const CycloElem& x) { return transfer_i(x, o); });
    auto zo = flat_of(double_matrix(j, k, o)).map([o](const CycloElem& x) { return transfer_j(x, o); });
    return kronecker(z2, zo);
  }
  return double_matrix_general(j, k, p);
}

// Colored double of the unknot over S(c,p).
inline Matrix<CycloElem> colored_unknot_double_matrix(int k, int p, int c) {
  using namespace tqft_detail;
  ColorData cd(p);
  auto basis = cd.basis(c);
  std::size_t m = basis.size();
  if (m == 0) return Matrix<CycloElem>(0, 0);
  auto qi = qi_at(p);
  auto theta = [&](int a, int b, int e) { return theta_value<CycloElem>(a, b, e, qi); };
  auto tet = [&](int A, int B, int E, int C, int D, int Fc) { return tet_value<CycloElem>(A, B, E, C, D, Fc, qi); };
  Matrix<CycloElem> l(m, m), bm(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int i = basis[a], j = basis[b];
      CycloElem x = CycloElem(0).at_level(p);
      for (int r = 0; r < cd.q; ++r) {
        if (!cd.small(i, r, j)) continue;
        x += divide(at(p, full_twist(r, i, j) * unknot_value(r)), theta(r, i, j), "theta") * tet(c, j, i, r, i, j);
      }
      l(a, b) = x;
    }
  int n = color_bound(p);
  CycloElem beta = beta_constant(p);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int i = basis[a], j = basis[b];
      CycloElem x = CycloElem(0).at_level(p);
      for (int s = 0; s < n; ++s) {
        if (!cd.small(c, s, s)) continue;
        CycloElem bsum = CycloElem(0).at_level(p);
        for (int r = 0; r < cd.q; ++r) {
          if (!cd.small(i, r, s)) continue;
          CycloElem u = divide(at(p, full_twist(r, i, s) * unknot_value(r)), theta(r, i, s), "theta") * tet(c, i, s, r, s, i);
          for (int r2 = 0; r2 < cd.q; ++r2) {
            if (!cd.small(j, r2, s)) continue;
            CycloElem v = divide(at(p, full_twist(r2, j, s).pow(k) * unknot_value(r2)), theta(r2, j, s), "theta") *
                          tet(c, j, s, r2, s, j);
            bsum += u * v;
          }
        }
        bsum = divide(bsum, theta(c, s, s), "theta");
        x += at(p, unknot_value(s) * twist_value(s).pow(2 * k + 1)) * bsum;
      }
      bm(a, b) = beta * x;
    }
  return bm * invert(l, "colored fusion matrix");
}

// p = 5, color 2 scalar: (A + A^-1)(beta(1 + mu^(2k+1) b_k(J)) - 1).
inline Matrix<CycloElem> colored_double_p5(const KnotRef& j, int k) {
  const int p = 5;
  auto s = knot_scalars(j);
  LaurentPoly m = twist_value(1).pow(2 * k + 1);
  CycloElem cover = beta_constant(p) * CycloElem(p, LaurentPoly(1) + m * s.cable_twisted(k));
  CycloElem a = CycloElem(p, LaurentPoly::A() + LaurentPoly::A(-1));
  return tqft_detail::scalar(a * (cover - CycloElem(1)));
}

inline Matrix<CycloElem> colored_double_matrix(const KnotRef& j, int k, int p, int c) {
  ColorData cd(p);
  if (!cd.is_color(c)) throw ValidationError("color " + std::to_string(c) + " is not a q-color at p=" + std::to_string(p));
  if (c == 0) return double_matrix(j, k, p);
  if (c % 2 || !cd.good(c)) return Matrix<CycloElem>(0, 0);
  if (tqft_detail::is_unknot(j)) {
    try {
      return colored_unknot_double_matrix(k, p, c);
    } catch (const UnsupportedSpecialization&) {
      throw;
    } catch (const std::domain_error& e) {
      throw UnsupportedSpecialization(std::string("colored network value: ") + e.what());
    }
  }
  if (p == 5 && c == 2) return colored_double_p5(j, k);
  throw UnsupportedSpecialization("colored doubles of " + j.str() + " are only available at p=5, c=2");
}

// ---------------------------------------------------------------------------
// Knot invariants by reference.

inline Matrix<CycloElem> connected_sum(const std::map<int, Matrix<CycloElem>>& left,
                                       const std::map<int, Matrix<CycloElem>>& right, int p, int i) {
  ColorData cd(p);
  std::vector<Matrix<CycloElem>> blocks;
  std::size_t total = 0;
  for (int a = 0; a < cd.q; ++a)
    for (int b = 0; b < cd.q; ++b) {
      if (!cd.small(i, a, b)) continue;
      auto l = left.find(a), r = right.find(b);
      if (l == left.end() || r == right.end())
        throw ValidationError("missing color block " + std::to_string(a) + "," + std::to_string(b));
      if (l->second.rows() == 0 || r->second.rows() == 0) continue;
      blocks.push_back(kronecker(tqft_detail::flat_of(l->second), tqft_detail::flat_of(r->second)));
      total += blocks.back().rows();
    }
  Matrix<CycloElem> out(total, total);
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) out(x, y) = CycloElem(0).at_level(p);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t x = 0; x < b.rows(); ++x)
      for (std::size_t y = 0; y < b.cols(); ++y) out(off + x, off + y) = b(x, y);
    off += b.rows();
  }
  return out;
}

inline Matrix<CycloElem> knot_matrix(const KnotRef& K, int p, int c = 0) {
  ColorData cd(p);
  if (!cd.is_color(c)) throw ValidationError("color " + std::to_string(c) + " is not a q-color at p=" + std::to_string(p));
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, Matrix<CycloElem>> cache;
  auto key = std::make_tuple(K.str(), p, c);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Matrix<CycloElem> out;
  switch (K.kind) {
    case KnotRef::Kind::Atlas:
      if (K.name == "U")
        out = c == 0 ? tqft_detail::scalar(CycloElem(1).at_level(p)) : Matrix<CycloElem>(0, 0);
      else if (K.name == "RT")
        out = knot_matrix(*KnotRef::twisted_double(-1, KnotRef::atlas("U")), p, c);
      else if (K.name == "F8")
        out = knot_matrix(*KnotRef::twisted_double(1, KnotRef::atlas("U")), p, c);
      else if (K.name == "LT")
        out = knot_matrix(*KnotRef::mirror_of(KnotRef::atlas("RT")), p, c);
      else
        throw ValidationError("unknown atlas knot " + K.name);
      break;
    case KnotRef::Kind::Double: out = colored_double_matrix(*K.args.at(0), K.k, p, c); break;
    case KnotRef::Kind::Mirror:
      out = knot_matrix(*K.args.at(0), p, c).map([](const CycloElem& x) { return x.bar(); });
      break;
    case KnotRef::Kind::Sum: {
      if (p == 2) throw UnsupportedSpecialization("connected sums are not multiplicative at p=2");
      if (p == 1) {
        out = c == 0 ? tqft_detail::scalar(CycloElem(1).at_level(p)) : Matrix<CycloElem>(0, 0);
        break;
      }
      std::map<int, Matrix<CycloElem>> l, r;
      for (int a : cd.colors()) {
        l[a] = knot_matrix(*K.args.at(0), p, a);
        r[a] = knot_matrix(*K.args.at(1), p, a);
      }
      out = connected_sum(l, r, p, c);
      break;
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[key] = out;
  return out;
}

inline TVInvariant<CycloElem> knot_invariant(const KnotRef& K, int p, int c = 0) {
  return make_invariant(p, knot_matrix(K, p, c));
}

inline TVInvariant<CycloElem> double_invariant(const KnotRef& j, int k, int p) {
  return make_invariant(p, double_matrix(j, k, p));
}

inline TVInvariant<CycloElem> colored_double_invariant(const KnotRef& j, int k, int p, int c) {
  return make_invariant(p, colored_double_matrix(j, k, p, c));
}

// ---------------------------------------------------------------------------
// Cyclic covers.

// Values <S^3(K)_d>_p for d = 1..dmax (index 0 holds the flat rank).
inline std::vector<CycloElem> cover_series(const TVInvariant<CycloElem>& z, int dmax) {
  std::vector<CycloElem> out;
  out.push_back(CycloElem(static_cast<int>(z.flat_rank)));
  if (z.flat_rank == 0) {
    out.resize(static_cast<std::size_t>(dmax) + 1, CycloElem(0));
    return out;
  }
  Matrix<CycloElem> pw = z.flat;
  for (int d = 1; d <= dmax; ++d) {
    out.push_back(pw.trace());
    pw = pw * z.flat;
  }
  return out;
}

// Power sums of the roots of a monic polynomial by Newton's identities, d = 1..dmax.
template <Field F>
std::vector<F> power_sums(const RingPoly<F>& f, int dmax) {
  int n = f.degree();
  std::vector<F> e(static_cast<std::size_t>(n) + 1, F(0));
  F lead = f.leading();
  // e_k = (-1)^k c_{n-k} / c_n
  for (int k = 0; k <= n; ++k) {
    F c = f.coeff(n - k) * lead.inverse();
    e[static_cast<std::size_t>(k)] = (k % 2) ? -c : c;
  }
  std::vector<F> s(static_cast<std::size_t>(dmax) + 1, F(0));
  s[0] = F(n);
  for (int d = 1; d <= dmax; ++d) {
    F acc(0);
    for (int i = 1; i <= std::min(d - 1, n); ++i) {
      F t = e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(d - i)];
      acc = (i % 2) ? acc + t : acc - t;
    }
    if (d <= n) {
      F t = F(d) * e[static_cast<std::size_t>(d)];
      acc = (d % 2) ? acc + t : acc - t;
    }
    s[static_cast<std::size_t>(d)] = acc;
  }
  return s;
}

// Sign s(k,d) relating p = 10 and p = 5 cover values.
inline int cover_sign(int k, int d) {
  if (k % 2 == 0) return 1;
  switch (((d % 6) + 6) % 6) {
    case 0: return 2;
    case 1:
    case 5: return 1;
    case 2:
    case 4: return -1;
    default: return -2;
  }
}

// beta_5 (1 + mu^(2k+1) b_k(J)): the trace of Z_5(D_k(J)).
inline CycloElem cover_p5_closed(const KnotRef& j, int k) {
  auto s = knot_scalars(j);
  LaurentPoly m = twist_value(1).pow(2 * k + 1);
  return beta_constant(5) * CycloElem(5, LaurentPoly(1) + m * s.cable_twisted(k));
}

// p = 10 value from the p = 5 power sum: s(k,d) j_5(s_d).
inline CycloElem cover_p10_from_p5(int k, int d, const CycloElem& s5) { return CycloElem(cover_sign(k, d)) * transfer_j(s5, 5); }

// Closed form for <S^3(D_0(F8))_d>_5.
inline CycloElem cover_d0f8_closed(int d) {
  const int p = 5;
  CycloElem a = CycloElem::A(p), ai = CycloElem::A(p, -1);
  CycloElem lambda = CycloElem(12) * (a + ai) - CycloElem(8) * (a * a + ai * ai) - CycloElem(1);
  CycloElem sum = CycloElem(0).at_level(p);
  CycloElem lp = CycloElem(1).at_level(p);
  for (int r = 0; 2 * r <= d; ++r) {
    Rational binom(1);
    for (int t = 0; t < 2 * r; ++t) binom = binom * Rational(d - t) / Rational(t + 1);
    CycloElem term = CycloElem(binom) * lp;
    sum += (r % 2) ? -term : term;
    lp = lp * lambda;
  }
  return CycloElem::A(p, 2 * d) * sum * CycloElem(Rational(1, 1) / Rational(1 << (d - 1)));
}

// ---------------------------------------------------------------------------
// Branched cyclic covers.

// Largest i with e_{2i} used in the branched sum.
inline int branched_color_limit(int p) {
  if (p < 3) throw ValidationError("branched covers need p >= 3");
  return p % 2 ? (p - 3) / 2 : p / 4 - 1;
}

// eta^-1 <K_d>_p for d = 0..dmax.
inline std::vector<CycloElem> branched_series(const KnotRef& K, int p, int dmax) {
  int top = branched_color_limit(p);
  std::vector<CycloElem> out(static_cast<std::size_t>(dmax) + 1, CycloElem(0).at_level(p));
  for (int i = 0; i <= top; ++i) {
    auto z = knot_invariant(K, p, 2 * i);
    auto s = cover_series(z, dmax);
    CycloElem e = unknot_at(p, 2 * i);
    for (int d = 0; d <= dmax; ++d) out[static_cast<std::size_t>(d)] += e * s[static_cast<std::size_t>(d)];
  }
  return out;
}

inline CycloElem branched_value(const KnotRef& K, int p, int d) {
  return resolve_kappa(eta_constant(p) * branched_series(K, p, d).at(static_cast<std::size_t>(d)));
}

// ---------------------------------------------------------------------------
// Signatures.

struct SeifertData {
  std::vector<std::vector<long>> V;
  std::size_t size() const { return V.size(); }
};

inline SeifertData seifert_matrix(const KnotRef& K) {
  SeifertData out;
  switch (K.kind) {
    case KnotRef::Kind::Atlas:
      if (K.name == "U") return out;
      if (K.name == "RT") return seifert_matrix(*KnotRef::twisted_double(-1, KnotRef::atlas("U")));
      if (K.name == "F8") return seifert_matrix(*KnotRef::twisted_double(1, KnotRef::atlas("U")));
      if (K.name == "LT") return seifert_matrix(*KnotRef::mirror_of(KnotRef::atlas("RT")));
      throw ValidationError("unknown atlas knot " + K.name);
    case KnotRef::Kind::Double: out.V = {{-1, 1}, {0, K.k}}; return out;
    case KnotRef::Kind::Mirror: {
      auto s = seifert_matrix(*K.args.at(0));
      std::size_t n = s.size();
      out.V.assign(n, std::vector<long>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.V[i][j] = -s.V[j][i];
      return out;
    }
    case KnotRef::Kind::Sum: {
      auto a = seifert_matrix(*K.args.at(0)), b = seifert_matrix(*K.args.at(1));
      std::size_t n = a.size() + b.size();
      out.V.assign(n, std::vector<long>(n, 0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.V[i][j] = a.V[i][j];
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.V[a.size() + i][a.size() + j] = b.V[i][j];
      return out;
    }
  }
  return out;
}

struct SignatureResult {
  int sigma = 0;
  int nullity = 0;
  bool degenerate() const { return nullity > 0; }
};

// Signature of (1-w)V + (1-w^-1)V^t at w = A_d^(2i), from exact sign sequences of the characteristic polynomial.
inline SignatureResult tristram_levine(const SeifertData& v, int d, int i) {
  SignatureResult out;
  if (d < 1) throw ValidationError("signature order must be positive");
  std::size_t n = v.size();
  if (d == 1 || n == 0 || i % d == 0) return out;
  CycloElem w = CycloElem::A(d, 2 * i), wb = CycloElem::A(d, -2 * i);
  CycloElem one = CycloElem(1).at_level(d);
  Matrix<CycloElem> h(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      h(a, b) = (one - w) * CycloElem(static_cast<int>(v.V[a][b])) + (one - wb) * CycloElem(static_cast<int>(v.V[b][a]));
  auto f = charpoly(h);
  // Coefficients are real algebraic numbers; signs of nonzero ones are read off the embedding.
  std::vector<int> sg;
  for (int k = 0; k <= f.degree(); ++k) {
    CycloElem c = f.coeff(k);
    if (c.is_zero()) {
      sg.push_back(0);
      continue;
    }
    double x = c.embed(1).real();
    sg.push_back(x > 0 ? 1 : -1);
  }
  int z = 0;
  while (z < static_cast<int>(sg.size()) && sg[static_cast<std::size_t>(z)] == 0) ++z;
  out.nullity = z;
  auto changes = [&](bool flip) {
    int cnt = 0, last = 0;
    for (int k = z; k < static_cast<int>(sg.size()); ++k) {
      int s = sg[static_cast<std::size_t>(k)];
      if (!s) continue;
      if (flip && (k % 2)) s = -s;
      if (last && s != last) ++cnt;
      last = s;
    }
    return cnt;
  };
  // Hermitian: all roots real, so Descartes' rule is exact.
  out.sigma = changes(false) - changes(true);
  return out;
}

// Total signature sigma_d = sum over i = 1..d-1 of the Tristram-Levine signatures at A_d^(2i).
inline int d_signature(const SeifertData& v, int d) {
  if (d <= 1) return 0;
  int s = 0;
  for (int i = 1; i < d; ++i) s += tristram_levine(v, d, i).sigma;
  return s;
}

inline bool d_signature_degenerate(const SeifertData& v, int d) {
  for (int i = 1; i < d; ++i)
    if (tristram_levine(v, d, i).degenerate()) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Cross-checks.

// <Sigma(2,3,c)>_p realized as the c-fold branched cover of the right trefoil.
inline CycloElem brieskorn_value(int c, int p) {
  if (c == 0) throw ValidationError("Brieskorn exponent must be nonzero");
  auto rt = KnotRef::atlas("RT");
  if (c > 0) return branched_value(*rt, p, c);
  return branched_value(*rt, p, -c).bar();
}

// Values for c = 1..cmax.
inline std::vector<CycloElem> brieskorn_series(int p, int cmax) {
  auto s = branched_series(*KnotRef::atlas("RT"), p, cmax);
  CycloElem eta = eta_constant(p);
  std::vector<CycloElem> out;
  for (auto& x : s) out.push_back(resolve_kappa(eta * x));
  return out;
}

struct Tau5Comparison {
  std::complex<double> lhs, rhs;
  int sigma = 0;
};

// tau_5 of the d-fold branched cover of D_k(U), from p = 10 and from p = 5; needs even sigma_d.
inline Tau5Comparison tau5_compare(int k, int d) {
  using std::numbers::pi;
  auto K = KnotRef::twisted_double(k, KnotRef::atlas("U"));
  Tau5Comparison out;
  out.sigma = d_signature(seifert_matrix(*K), d);
  if (out.sigma % 2) throw UnsupportedSpecialization("odd total signature");
  std::complex<double> v = std::polar(1.0, 2 * pi / 40);
  CycloElem k10 = branched_value(*K, 10, d);
  CycloElem lhs = beta_constant(10).inverse() * k10;
  out.lhs = evaluate_at(lhs, -v * v, v * v * v) * std::pow(v, -9 - 9 * out.sigma);
  std::complex<double> a10 = -std::polar(1.0, 2 * pi / 20);
  CycloElem n5 = branched_series(*K, 5, d).at(static_cast<std::size_t>(d));
  CycloElem rhs = transfer_j(n5, 5) * CycloElem(cover_sign(k, d));
  out.rhs = evaluate_at(rhs, a10, 1.0) * std::pow(a10, out.sigma / 2);
  return out;
}

// Witten's matrices w_r(RT), w_r(F8) over k_{2r}, indices 1..r-1.
inline Matrix<CycloElem> witten_matrix(int r, bool figure_eight) {
  if (r < 2) throw ValidationError("witten matrices need r >= 2");
  int p = 2 * r;
  CycloElem gauss = CycloElem(0).at_level(p);
  for (int m = 1; m <= 4 * r; ++m) gauss += CycloElem::A(p, -m * m);
  CycloElem pre = gauss * CycloElem(Rational(1, 4 * r));
  pre = pre * CycloElem::A(p, figure_eight ? -r * r : 4 - r * r);
  if ((r + 1) % 2) pre = -pre;
  auto sz = static_cast<std::size_t>(r - 1);
  Matrix<CycloElem> w(sz, sz);
  auto neg_a = [p](int e) {
    CycloElem x = CycloElem::A(p, e);
    return (e % 2) ? -x : x;
  };
  for (int j = 1; j < r; ++j)
    for (int l = 1; l < r; ++l) {
      CycloElem f = CycloElem::A(p, 2 * l * j) - CycloElem::A(p, -2 * l * j);
      CycloElem t = figure_eight ? neg_a(j * j + 2 * l * l) : neg_a(-l * l);
      w(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) = pre * t * f;
    }
  return w;
}

// ---------------------------------------------------------------------------
// Parallel evaluation over independent cells.

inline unsigned worker_count() {
  if (const char* e = std::getenv("SKEIN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end == e || *end || v < 1) throw ValidationError("SKEIN_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(0..n-1) on worker threads; results are stored by index so output order is fixed.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errs(n);
  unsigned w = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> ts;
  for (unsigned t = 1; t < w; ++t) ts.emplace_back(run);
  run();
  for (auto& t : ts) t.join();
  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errs[i]) std::rethrow_exception(errs[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace skein
