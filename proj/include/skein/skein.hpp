#pragma once

#include "diagram.hpp"
#include "errors.hpp"
#include "network.hpp"
#include "ratfunc.hpp"
#include "temperley_lieb.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

namespace skein {

// ---------------------------------------------------------------------------
// Transfer matrices of slice words.

namespace skein_detail {

using State = std::map<Matching, LaurentPoly>;

inline void add_to(State& s, const Matching& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = s.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

// Insert a cup at 0-based points i, i+1.
inline Matching apply_cup(const Matching& m, int i) {
  int w = static_cast<int>(m.size());
  Matching r(static_cast<std::size_t>(w + 2));
  auto sh = [&](int p) { return p < i ? p : p + 2; };
  for (int p = 0; p < w; ++p) r[static_cast<std::size_t>(sh(p))] = sh(m[static_cast<std::size_t>(p)]);
  r[static_cast<std::size_t>(i)] = i + 1;
  r[static_cast<std::size_t>(i + 1)] = i;
  return r;
}

// Join 0-based points i, i+1; second is true when a closed loop forms.
inline std::pair<Matching, bool> apply_cap(const Matching& m, int i) {
  int w = static_cast<int>(m.size());
  Matching t = m;
  bool loop = t[static_cast<std::size_t>(i)] == i + 1;
  if (!loop) {
    int a = t[static_cast<std::size_t>(i)], b = t[static_cast<std::size_t>(i + 1)];
    t[static_cast<std::size_t>(a)] = b;
    t[static_cast<std::size_t>(b)] = a;
  }
  Matching r(static_cast<std::size_t>(w - 2));
  auto sh = [&](int p) { return p < i ? p : p - 2; };
  for (int p = 0; p < w; ++p) {
    if (p == i || p == i + 1) continue;
    r[static_cast<std::size_t>(sh(p))] = sh(t[static_cast<std::size_t>(p)]);
  }
  return {r, loop};
}

inline State step(const State& s, const SliceToken& tok) {
  State out;
  LaurentPoly delta = loop_value();
  int i = tok.pos - 1;
  for (auto& [m, c] : s) {
    switch (tok.kind) {
      case SliceToken::Kind::Cup: add_to(out, apply_cup(m, i), c); break;
      case SliceToken::Kind::Cap: {
        auto [r, loop] = apply_cap(m, i);
        add_to(out, r, loop ? c * delta : c);
        break;
      }
      default: {
        LaurentPoly id = tok.kind == SliceToken::Kind::CrossPos ? LaurentPoly::A() : LaurentPoly::A(-1);
        LaurentPoly e = tok.kind == SliceToken::Kind::CrossPos ? LaurentPoly::A(-1) : LaurentPoly::A();
        add_to(out, m, c * id);
        auto [r, loop] = apply_cap(m, i);
        add_to(out, apply_cup(r, i), loop ? c * e * delta : c * e);
      }
    }
  }
  return out;
}

}  // namespace skein_detail

// Q(T): column j expresses T applied to the bottom matching D_j in the matching basis at the top.
// Entry (i, j) is the coefficient of D_i; the bottom and top widths agree.
inline Matrix<LaurentPoly> transfer_matrix(const SliceWord& w) {
  int n = w.half_width();
  const auto& ms = enumerate_matchings(n);
  std::map<Matching, std::size_t> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index[ms[i]] = i;
  Matrix<LaurentPoly> q(ms.size(), ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    skein_detail::State s{{ms[j], LaurentPoly(1)}};
    for (auto& t : w.tokens()) s = skein_detail::step(s, t);
    for (auto& [m, c] : s) q(index.at(m), j) = c;
  }
  return q;
}

// Row convention used by the flat decomposition: row i is T applied to D_i.
inline Matrix<LaurentPoly> transfer_matrix_rows(const SliceWord& w) { return transfer_matrix(w).transpose(); }

// B(T): entry (i, j) is the bracket of D_i below T below the mirror of D_j.
inline Matrix<LaurentPoly> closure_matrix(const SliceWord& w) {
  return transfer_matrix_rows(w) * pairing_matrix(w.half_width());
}

// Bracket of a closed slice word.
inline LaurentPoly bracket(const SliceWord& w) {
  if (!w.closed()) throw ValidationError("bracket needs a closed slice word (2n=0)");
  return transfer_matrix(w)(0, 0);
}

// Unoriented crossings (counterclockwise slots, A-smoothing pairs 0-1 and 2-3) of the closure of T by
// the matchings bottom and top, plus the number of crossingless loops.
inline std::pair<std::vector<std::array<int, 4>>, int> slice_closure(const SliceWord& w, const Matching& bottom,
                                                                     const Matching& top) {
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  std::vector<int> pos;
  for (std::size_t k = 0; k < bottom.size(); ++k) pos.push_back(fresh());
  for (std::size_t k = 0; k < bottom.size(); ++k) unite(pos[k], pos[static_cast<std::size_t>(bottom[k])]);
  std::vector<std::array<int, 4>> xs;
  for (auto& t : w.tokens()) {
    auto i = static_cast<std::size_t>(t.pos - 1);
    switch (t.kind) {
      case SliceToken::Kind::Cup: {
        int a = fresh(), b = fresh();
        unite(a, b);
        pos.insert(pos.begin() + static_cast<long>(i), {a, b});
        break;
      }
      case SliceToken::Kind::Cap:
        unite(pos[i], pos[i + 1]);
        pos.erase(pos.begin() + static_cast<long>(i), pos.begin() + static_cast<long>(i) + 2);
        break;
      default: {
        int a = pos[i], b = pos[i + 1], c = fresh(), d = fresh();
        if (t.kind == SliceToken::Kind::CrossPos) xs.push_back({b, d, c, a});
        else xs.push_back({a, b, d, c});
        pos[i] = c;
        pos[i + 1] = d;
      }
    }
  }
  for (std::size_t k = 0; k < top.size(); ++k) unite(pos[k], pos[static_cast<std::size_t>(top[k])]);
  std::set<int> used;
  for (auto& x : xs)
    for (int& l : x) {
      l = find(l) + 1;
      used.insert(l);
    }
  std::set<int> roots;
  for (std::size_t k = 0; k < parent.size(); ++k) roots.insert(find(static_cast<int>(k)) + 1);
  int loops = 0;
  for (int r : roots)
    if (!used.count(r)) ++loops;
  return {xs, loops};
}

// B(T) computed entry by entry from closure diagrams.
inline Matrix<LaurentPoly> closure_matrix_by_diagrams(const SliceWord& w) {
  const auto& ms = enumerate_matchings(w.half_width());
  Matrix<LaurentPoly> b(ms.size(), ms.size());
  LaurentPoly a = LaurentPoly::A(), ai = LaurentPoly::A(-1);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      auto [xs, loops] = slice_closure(w, ms[i], ms[j]);
      std::vector<NetVertex<LaurentPoly>> vs;
      for (auto& x : xs) vs.push_back(crossing_vertex(x, a, ai));
      b(i, j) = contract(vs, loop_value(), loops);
    }
  return b;
}

// ---------------------------------------------------------------------------
// Scalars attached to a knot J: <J> and <J_2> of 0-framed diagrams.

struct KnotScalars {
  LaurentPoly bracket;         // <J> at writhe 0
  LaurentPoly double_bracket;  // [[J]]: bracket of the 0-framed 2-cable minus 1

  // Bracket of the 2-cable with k full twists: A^{2k} [[J]] + A^{-6k}.
  LaurentPoly cable_twisted(int k) const { return LaurentPoly::A(2 * k) * double_bracket + LaurentPoly::A(-6 * k); }
  KnotScalars bar() const { return {bracket.bar(), double_bracket.bar()}; }
};

inline KnotScalars knot_scalars(const PDCode& d) {
  if (!d.is_knot()) throw ValidationError("knot scalars need a one-component diagram");
  PDCode z = d.normalize_writhe();
  LaurentPoly b = network_bracket(z);
  LaurentPoly c0 = network_bracket(z.cable(2));
  // The 2-cable of a 0-writhe diagram is the two-bundle with no twist: [[J]] = c_0 - 1.
  return {b, c0 - LaurentPoly(1)};
}

// Atlas name of a double whose diagram is stored: D(-1,U), D(1,U) and D(0,U).
inline std::optional<std::string> double_atlas_name(const KnotRef& r) {
  if (r.kind != KnotRef::Kind::Double || r.args.size() != 1) return std::nullopt;
  const auto& j = *r.args[0];
  if (j.kind != KnotRef::Kind::Atlas || j.name != "U") return std::nullopt;
  if (r.k == -1) return "RT";
  if (r.k == 1) return "F8";
  if (r.k == 0) return "U";
  return std::nullopt;
}

inline KnotScalars knot_scalars(const KnotRef& r) {
  static std::mutex mu;
  static std::map<std::string, KnotScalars> cache;
  std::string key = r.str();
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  KnotScalars out;
  LaurentPoly delta = loop_value();
  switch (r.kind) {
    case KnotRef::Kind::Atlas: out = knot_scalars(atlas::diagram(r.name)); break;
    case KnotRef::Kind::Mirror: out = knot_scalars(*r.args.at(0)).bar(); break;
    case KnotRef::Kind::Sum: {
      out = {LaurentPoly(1), LaurentPoly(1)};
      LaurentPoly dscale(1), tscale(1);
      for (std::size_t k = 0; k < r.args.size(); ++k) {
        auto s = knot_scalars(*r.args[k]);
        out.bracket *= s.bracket;
        out.double_bracket *= s.double_bracket;
        if (k) {
          dscale *= delta;
          tscale *= delta * delta - LaurentPoly(1);
        }
      }
      out.bracket = exact_div(out.bracket, dscale);
      out.double_bracket = exact_div(out.double_bracket, tscale);
      break;
    }
    case KnotRef::Kind::Double: {
      auto name = double_atlas_name(r);
      if (!name) throw ValidationError("no stored diagram for " + key + " as a pattern companion");
      out = knot_scalars(atlas::diagram(*name));
      break;
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[key] = out;
  return out;
}

// Stored 0-writhe diagram for a knot reference, when one is available.
inline std::optional<PDCode> knot_diagram(const KnotRef& r) {
  switch (r.kind) {
    case KnotRef::Kind::Atlas: return atlas::diagram(r.name).normalize_writhe();
    case KnotRef::Kind::Mirror: {
      auto d = knot_diagram(*r.args.at(0));
      if (!d) return std::nullopt;
      return d->mirror();
    }
    case KnotRef::Kind::Sum: {
      PDCode acc = atlas::unknot();
      for (auto& a : r.args) {
        auto d = knot_diagram(*a);
        if (!d) return std::nullopt;
        acc = PDCode::connected_sum(acc, *d);
      }
      return acc.normalize_writhe();
    }
    case KnotRef::Kind::Double: {
      auto name = double_atlas_name(r);
      if (!name) return std::nullopt;
      return atlas::diagram(*name).normalize_writhe();
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Colored trivalent networks.

inline bool admissible(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

// Theta net in closed form; qi(k) returns the quantum integer [k] in the target field.
template <class F>
F theta_value(int a, int b, int c, const std::function<F(int)>& qi) {
  if (!admissible(a, b, c)) throw std::invalid_argument("theta of non-admissible colors");
  int m = (a + b - c) / 2, n = (b + c - a) / 2, k = (a + c - b) / 2;
  auto fact = [&](int x) {
    F r(1);
    for (int t = 2; t <= x; ++t) r = r * qi(t);
    return r;
  };
  F num = fact(m + n + k + 1) * fact(m) * fact(n) * fact(k);
  F den = fact(m + n) * fact(n + k) * fact(m + k);
  if ((m + n + k) % 2) num = F(0) - num;
  return num / den;
}

// Tetrahedral net with edges A..F on faces (A,D,E), (B,C,E), (A,B,F), (C,D,F).
template <class F>
F tet_value(int A, int B, int E, int C, int D, int Fc, const std::function<F(int)>& qi) {
  if (!admissible(A, D, E) || !admissible(B, C, E) || !admissible(A, B, Fc) || !admissible(C, D, Fc))
    throw std::invalid_argument("tetrahedron with non-admissible face");
  auto fact = [&](int x) {
    F r(1);
    for (int t = 2; t <= x; ++t) r = r * qi(t);
    return r;
  };
  int a[4] = {(A + D + E) / 2, (B + C + E) / 2, (A + B + Fc) / 2, (C + D + Fc) / 2};
  int b[3] = {(B + D + E + Fc) / 2, (A + C + E + Fc) / 2, (A + B + C + D) / 2};
  F inner(1);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) inner = inner * fact(b[j] - a[i]);
  F ext = fact(A) * fact(B) * fact(C) * fact(D) * fact(E) * fact(Fc);
  int lo = *std::max_element(a, a + 4), hi = *std::min_element(b, b + 3);
  F sum(0);
  for (int s = lo; s <= hi; ++s) {
    F den(1);
    for (int i = 0; i < 4; ++i) den = den * fact(s - a[i]);
    for (int j = 0; j < 3; ++j) den = den * fact(b[j] - s);
    F term = fact(s + 1) / den;
    sum = s % 2 ? sum - term : sum + term;
  }
  return inner / ext * sum;
}

inline RatFunc theta_generic(int a, int b, int c) {
  return theta_value<RatFunc>(a, b, c, [](int k) { return RatFunc(qint(k)); });
}

inline RatFunc tet_generic(int A, int B, int E, int C, int D, int Fc) {
  return tet_value<RatFunc>(A, B, E, C, D, Fc, [](int k) { return RatFunc(qint(k)); });
}

// The same nets evaluated by expanding the projectors.
inline RatFunc theta_by_network(int a, int b, int c) {
  auto [v, s] = evaluate_colored_graph({{{0, 2, 1}}, {{0, 1, 2}}}, {a, b, c});
  return RatFunc(v) / RatFunc(s);
}

inline RatFunc tet_by_network(int A, int B, int E, int C, int D, int Fc) {
  // Edge ids: A0 B1 C2 D3 E4 F5; vertices (A,D,E), (B,C,E), (A,B,F), (C,D,F) embedded with the
  // last one in the middle.
  std::vector<ColoredVertex> vs = {{{4, 3, 0}}, {{1, 2, 4}}, {{0, 5, 1}}, {{3, 2, 5}}};
  auto [v, s] = evaluate_colored_graph(vs, {A, B, C, D, E, Fc});
  return RatFunc(v) / RatFunc(s);
}

// ---------------------------------------------------------------------------
// Colored closures.

// Bracket of the closure of a braid whose strands are grouped into bundles, each bundle closed
// through a Jones-Wenzl projector of its size.
inline RatFunc colored_braid_closure(const std::vector<int>& groups, const std::vector<int>& braid) {
  int m = std::accumulate(groups.begin(), groups.end(), 0);
  std::vector<int> start(static_cast<std::size_t>(m) + 1), cur(static_cast<std::size_t>(m) + 1);
  int next = 1;
  for (int t = 1; t <= m; ++t) start[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t)] = next++;
  std::vector<NetVertex<LaurentPoly>> vs;
  LaurentPoly a = LaurentPoly::A(), ai = LaurentPoly::A(-1);
  for (int g : braid) {
    int t = std::abs(g);
    if (t < 1 || t >= m) throw ValidationError("braid generator out of range");
    int n1 = next++, n2 = next++;
    int left = cur[static_cast<std::size_t>(t)], right = cur[static_cast<std::size_t>(t + 1)];
    if (g > 0) vs.push_back(crossing_vertex<LaurentPoly>({right, n2, n1, left}, a, ai));
    else vs.push_back(crossing_vertex<LaurentPoly>({left, right, n2, n1}, a, ai));
    cur[static_cast<std::size_t>(t)] = n1;
    cur[static_cast<std::size_t>(t + 1)] = n2;
  }
  LaurentPoly scale(1);
  int first = 1;
  int free_loops = 0;
  for (int g : groups) {
    if (g > 0) {
      auto [sc, f] = jones_wenzl_cleared(g);
      scale *= sc;
      std::vector<int> in, out;
      for (int t = first; t < first + g; ++t) {
        in.push_back(cur[static_cast<std::size_t>(t)]);
        out.push_back(start[static_cast<std::size_t>(t)]);
      }
      vs.push_back(projector_vertex(in, out, f));
    }
    first += g;
  }
  if (vs.empty()) return RatFunc(loop_value().pow(free_loops));
  return RatFunc(contract(vs, loop_value(), free_loops)) / RatFunc(scale);
}

// Bracket of the 2-bundle cable of a 0-writhe knot diagram, bundles colored j and s, with k relative
// full twists of the bundles inserted on one arc.
inline RatFunc colored_cable(const PDCode& knot, int j, int s, int k) {
  std::vector<int> braid = braids::bundle_twist(j, s, k);
  if (knot.size() == 0) return colored_braid_closure({j, s}, braid);
  int m = j + s;
  if (m == 0) return RatFunc(1);
  std::vector<int> cut;
  PDCode cab = knot.cable(m, braid, &cut);
  std::vector<std::array<int, 4>> xs;
  for (auto& c : cab.crossings()) xs.push_back(c.a);
  // The cut labels run into the grid of the crossing at the head of the smallest arc; the cable lists
  // the braid first and then one m-by-m grid per crossing.
  std::size_t hc = knot.head_slots().at(*knot.labels().begin()).first;
  std::size_t lo = braid.size() + hc * static_cast<std::size_t>(m * m), hi = lo + static_cast<std::size_t>(m * m);
  int next = *cab.labels().rbegin() + 1;
  std::vector<int> in;
  for (int l : cut) {
    bool done = false;
    for (std::size_t ci = lo; ci < hi && !done; ++ci)
      for (auto& x : xs[ci])
        if (!done && x == l) {
          x = next;
          done = true;
        }
    if (!done) throw std::logic_error("cable cut label not found at the head crossing");
    in.push_back(next++);
  }
  std::vector<NetVertex<LaurentPoly>> vs;
  LaurentPoly a = LaurentPoly::A(), ai = LaurentPoly::A(-1);
  for (auto& x : xs) vs.push_back(crossing_vertex(x, a, ai));
  LaurentPoly scale(1);
  std::size_t first = 0;
  for (int g : {j, s}) {
    if (g > 0) {
      auto [sc, f] = jones_wenzl_cleared(g);
      scale *= sc;
      std::vector<int> bin(in.begin() + static_cast<long>(first), in.begin() + static_cast<long>(first) + g);
      std::vector<int> bout(cut.begin() + static_cast<long>(first), cut.begin() + static_cast<long>(first) + g);
      vs.push_back(projector_vertex(bin, bout, f));
    }
    first += static_cast<std::size_t>(g);
  }
  return RatFunc(contract(vs, loop_value(), cab.free_loops())) / RatFunc(scale);
}

}  // namespace skein
