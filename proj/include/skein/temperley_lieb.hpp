#pragma once

#include "constants.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <vector>

namespace skein {

// Non-crossing perfect matching of 2n points, stored 0-based: m[m[i]] = i.
using Matching = std::vector<int>;

inline bool is_noncrossing_matching(const Matching& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (m[i] < 0 || m[i] >= n || m[i] == i || m[m[i]] != i) return false;
    for (int j = i + 1; j < n; ++j)
      if (i < j && j < m[i] && m[i] < m[j]) return false;
  }
  return true;
}

namespace tl_detail {
// Non-crossing matchings of the points lo..hi-1, written into copies of m.
inline void gen_matchings(int lo, int hi, const Matching& m, std::vector<Matching>& out) {
  if (lo >= hi) {
    out.push_back(m);
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    Matching base = m;
    base[lo] = j;
    base[j] = lo;
    std::vector<Matching> inner;
    gen_matchings(lo + 1, j, base, inner);
    for (auto& x : inner) gen_matchings(j + 1, hi, x, out);
  }
}
}  // namespace tl_detail

// All non-crossing matchings on 2n points, sorted lexicographically by the matching array.
inline const std::vector<Matching>& enumerate_matchings(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Matching>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Matching> out;
  tl_detail::gen_matchings(0, 2 * n, Matching(static_cast<std::size_t>(2 * n), -1), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return cache[n] = out;
}

inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline std::string matching_str(const Matching& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (static_cast<int>(i) < m[i]) s += "(" + std::to_string(i + 1) + std::to_string(m[i] + 1) + ")";
  return s;
}

// Number of closed loops formed by gluing two matchings on the same points.
inline int loops_between(const Matching& a, const Matching& b) {
  int n = static_cast<int>(a.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int p = s;
    do {
      seen[p] = true;
      int q = a[p];
      seen[q] = true;
      p = b[q];
    } while (p != s);
  }
  return loops;
}

// Pairing matrix D(n): entry delta^(loops of D_i glued to the mirror of D_j).
inline Matrix<LaurentPoly> pairing_matrix(int n) {
  const auto& ms = enumerate_matchings(n);
  Matrix<LaurentPoly> d(ms.size(), ms.size());
  LaurentPoly delta = loop_value();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) d(i, j) = delta.pow(loops_between(ms[i], ms[j]));
  return d;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb diagrams on n strands: points 0..n-1 bottom, n..2n-1 top (left to right).

struct TLDiagram {
  int n = 0;
  Matching m;
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) { return a.m < b.m; }
  friend bool operator==(const TLDiagram& a, const TLDiagram& b) { return a.n == b.n && a.m == b.m; }

  static TLDiagram identity(int n) {
    TLDiagram d{n, Matching(static_cast<std::size_t>(2 * n))};
    for (int i = 0; i < n; ++i) {
      d.m[i] = n + i;
      d.m[n + i] = i;
    }
    return d;
  }
  // Cap-cup generator e_i joining strands i, i+1 (1-based) at bottom and at top.
  static TLDiagram generator(int n, int i) {
    TLDiagram d = identity(n);
    int a = i - 1, b = i;
    d.m[a] = b;
    d.m[b] = a;
    d.m[n + a] = n + b;
    d.m[n + b] = n + a;
    return d;
  }
};

// Stack x below y; returns the composite and the number of closed loops.
inline std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y) {
  int n = x.n;
  // Points: x bottom (0..n-1), middle (n..2n-1 as x top == y bottom), y top.
  // Walk from each outer point through alternating x and y connections.
  TLDiagram out{n, Matching(static_cast<std::size_t>(2 * n), -1)};
  std::vector<bool> mid_seen(static_cast<std::size_t>(n), false);
  auto walk = [&](int start_outer) {
    // start_outer in 0..2n-1 of the result; returns partner.
    bool in_x = start_outer < n;
    int p = in_x ? start_outer : (start_outer - n) + n;  // index in the current diagram
    for (;;) {
      int q = in_x ? x.m[p] : y.m[p];
      if (in_x) {
        if (q < n) return q;
        int mid = q - n;
        mid_seen[mid] = true;
        in_x = false;
        p = mid;
      } else {
        if (q >= n) return q;
        int mid = q;
        mid_seen[mid] = true;
        in_x = true;
        p = mid + n;
      }
    }
  };
  for (int s = 0; s < 2 * n; ++s) {
    if (out.m[s] >= 0) continue;
    int t = walk(s);
    out.m[s] = t;
    out.m[t] = s;
  }
  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (mid_seen[k]) continue;
    ++loops;
    int p = k;
    do {
      mid_seen[p] = true;
      int q = y.m[p];  // y bottom point p pairs with another y bottom point
      mid_seen[q] = true;
      p = x.m[q + n] - n;  // x top point q pairs with another x top point
    } while (p != k);
  }
  return {out, loops};
}

// Linear combination of TL diagrams.
template <CommutativeRing R>
struct TLElement {
  int n = 0;
  std::map<TLDiagram, R> terms;

  static TLElement identity(int n) {
    TLElement e{n, {}};
    e.terms[TLDiagram::identity(n)] = R(1);
    return e;
  }
  void add(const TLDiagram& d, const R& c) {
    if (is_zero(c)) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms.emplace(d, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) terms.erase(it);
  }
  TLElement scaled(const R& s) const {
    TLElement r{n, {}};
    for (auto& [d, c] : terms) r.add(d, c * s);
    return r;
  }
  friend TLElement operator+(const TLElement& a, const TLElement& b) {
    TLElement r = a;
    for (auto& [d, c] : b.terms) r.add(d, c);
    return r;
  }
  friend TLElement operator-(const TLElement& a, const TLElement& b) { return a + b.scaled(R(-1)); }
  // a below b, loops weighted by delta.
  static TLElement multiply(const TLElement& a, const TLElement& b, const R& delta) {
    TLElement r{a.n, {}};
    std::vector<R> dpow{R(1)};
    for (auto& [da, ca] : a.terms)
      for (auto& [db, cb] : b.terms) {
        auto [d, loops] = compose(da, db);
        while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
        r.add(d, ca * cb * dpow[static_cast<std::size_t>(loops)]);
      }
    return r;
  }
  // Add a straight strand on the right.
  TLElement tensor_id() const {
    TLElement r{n + 1, {}};
    for (auto& [d, c] : terms) {
      TLDiagram e{n + 1, Matching(static_cast<std::size_t>(2 * (n + 1)))};
      auto map = [&](int p) { return p < n ? p : p + 1; };
      for (int p = 0; p < 2 * n; ++p) e.m[map(p)] = map(d.m[p]);
      e.m[n] = 2 * n + 1;
      e.m[2 * n + 1] = n;
      r.add(e, c);
    }
    return r;
  }
  // Closure trace: connect top point i to bottom point i around the side.
  R trace(const R& delta) const {
    R s(0);
    for (auto& [d, c] : terms) {
      Matching side(static_cast<std::size_t>(2 * n));
      for (int i = 0; i < n; ++i) {
        side[i] = n + i;
        side[n + i] = i;
      }
      R w = c;
      for (int k = loops_between(d.m, side); k > 0; --k) w = w * delta;
      s = s + w;
    }
    return s;
  }
  friend bool operator==(const TLElement& a, const TLElement& b) { return a.n == b.n && a.terms == b.terms; }
};

// Jones-Wenzl idempotent over Q(A): f_{k+1} = f_k (x) 1 + ([k]/[k+1]) (f_k (x) 1) e_k (f_k (x) 1).
inline const TLElement<RatFunc>& jones_wenzl(int n) {
  static std::mutex mu;
  static std::deque<TLElement<RatFunc>> cache;
  std::lock_guard<std::mutex> lk(mu);
  if (cache.empty()) cache.push_back(TLElement<RatFunc>::identity(0));
  RatFunc delta(loop_value());
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size()) - 1;
    TLElement<RatFunc> f = cache.back().tensor_id();
    if (k == 0) {
      cache.push_back(f);
      continue;
    }
    TLElement<RatFunc> e{k + 1, {}};
    e.add(TLDiagram::generator(k + 1, k), RatFunc(1));
    RatFunc coef = RatFunc(qint(k)) / RatFunc(qint(k + 1));
    auto fe = TLElement<RatFunc>::multiply(f, e, delta);
    auto fef = TLElement<RatFunc>::multiply(fe, f, delta);
    cache.push_back(f + fef.scaled(coef));
  }
  return cache[static_cast<std::size_t>(n)];
}

// The projector with denominators cleared: returns (scale, scale * f_n) with Laurent coefficients.
inline std::pair<LaurentPoly, TLElement<LaurentPoly>> jones_wenzl_cleared(int n) {
  const auto& f = jones_wenzl(n);
  LaurentPoly l(1);
  for (auto& [d, c] : f.terms) {
    LaurentPoly g = gcd(l, c.den());
    l = exact_div(l * c.den(), g);
  }
  TLElement<LaurentPoly> out{n, {}};
  for (auto& [d, c] : f.terms) out.add(d, exact_div(c.num() * l, c.den()));
  return {l, out};
}

}  // namespace skein
