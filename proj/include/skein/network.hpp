#pragma once

#include "diagram.hpp"
#include "temperley_lieb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace skein {

// A vertex of a planar strand network: slots carry edge labels, and the vertex is a linear
// combination of pairings of its slots. Each label must occur exactly twice in the whole network.
template <CommutativeRing R>
struct NetVertex {
  std::vector<int> labels;
  std::vector<std::pair<Matching, R>> terms;
};

namespace net_detail {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace net_detail

// Evaluate a closed network: every closed loop contributes delta. Vertices are absorbed greedily
// into a frontier whose state is a pairing of the currently open labels.
template <CommutativeRing R>
R contract(const std::vector<NetVertex<R>>& vs, const R& delta, int free_loops = 0) {
  // Relabel to 0..L-1.
  std::map<int, int> ids;
  for (auto& v : vs)
    for (int l : v.labels) ids.emplace(l, static_cast<int>(ids.size()));
  std::vector<int> count(ids.size(), 0);
  std::vector<std::vector<int>> vl(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (int l : vs[i].labels) {
      int id = ids.at(l);
      vl[i].push_back(id);
      ++count[static_cast<std::size_t>(id)];
    }
  for (int c : count)
    if (c != 2) throw ValidationError("network label does not occur exactly twice");
  int nl = static_cast<int>(ids.size());

  std::vector<R> dpow{R(1)};
  auto dp = [&](int k) {
    while (static_cast<int>(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
    return dpow[static_cast<std::size_t>(k)];
  };

  std::vector<int> seen(static_cast<std::size_t>(nl), 0);  // occurrences absorbed so far
  std::vector<int> open;                                   // sorted open labels
  std::unordered_map<std::vector<int>, R, net_detail::VecHash> state;
  state.emplace(std::vector<int>{}, R(1));
  std::vector<bool> done(vs.size(), false);

  // Scratch per merge.
  std::vector<std::array<int, 2>> adj(static_cast<std::size_t>(nl), {-1, -1});
  std::vector<int> mark(static_cast<std::size_t>(nl), 0);
  int stamp = 0;

  for (std::size_t step = 0; step < vs.size(); ++step) {
    // Pick the vertex sharing the most labels with the frontier; ties favour fewer new labels.
    std::size_t best = vs.size();
    int best_score = -1 << 30;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (done[i]) continue;
      int shared = 0, fresh = 0;
      for (int l : vl[i]) (seen[static_cast<std::size_t>(l)] == 1 ? shared : fresh)++;
      int score = 4 * shared - fresh;
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    done[best] = true;
    const auto& v = vs[best];
    const auto& labs = vl[best];
    for (int l : labs) ++seen[static_cast<std::size_t>(l)];
    std::vector<int> next_open;
    {
      std::vector<int> cand = open;
      cand.insert(cand.end(), labs.begin(), labs.end());
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (int l : cand)
        if (seen[static_cast<std::size_t>(l)] == 1) next_open.push_back(l);
    }
    std::vector<int> next_index(static_cast<std::size_t>(nl), -1);
    for (std::size_t k = 0; k < next_open.size(); ++k) next_index[static_cast<std::size_t>(next_open[k])] = static_cast<int>(k);

    std::unordered_map<std::vector<int>, R, net_detail::VecHash> next;
    next.reserve(state.size() * 2 + 1);
    std::vector<int> touched;
    for (auto& [key, coef] : state) {
      for (auto& [pairing, c] : v.terms) {
        ++stamp;
        touched.clear();
        auto connect = [&](int a, int b) {
          for (int x : {a, b})
            if (mark[static_cast<std::size_t>(x)] != stamp) {
              mark[static_cast<std::size_t>(x)] = stamp;
              adj[static_cast<std::size_t>(x)] = {-1, -1};
              touched.push_back(x);
            }
          auto& ea = adj[static_cast<std::size_t>(a)];
          (ea[0] < 0 ? ea[0] : ea[1]) = b;
          auto& eb = adj[static_cast<std::size_t>(b)];
          (eb[0] < 0 ? eb[0] : eb[1]) = a;
        };
        int loops = 0;
        for (std::size_t k = 0; k < key.size(); ++k)
          if (static_cast<int>(k) < key[k]) connect(open[k], open[static_cast<std::size_t>(key[k])]);
        for (std::size_t s = 0; s < pairing.size(); ++s) {
          std::size_t t = static_cast<std::size_t>(pairing[s]);
          if (s >= t) continue;
          int a = labs[s], b = labs[t];
          if (a == b) {
            ++loops;
            continue;
          }
          connect(a, b);
        }
        // Trace paths between open labels; what remains are closed loops.
        std::vector<int> out(next_open.size(), -1);
        for (int x : touched) {
          if (next_index[static_cast<std::size_t>(x)] < 0 || out[static_cast<std::size_t>(next_index[static_cast<std::size_t>(x)])] >= 0) continue;
          int prev = -1, cur = x;
          mark[static_cast<std::size_t>(cur)] = -stamp;
          for (;;) {
            auto& e = adj[static_cast<std::size_t>(cur)];
            int nx = e[0] != prev ? e[0] : e[1];
            if (nx < 0) break;
            prev = cur;
            cur = nx;
            mark[static_cast<std::size_t>(cur)] = -stamp;
            if (next_index[static_cast<std::size_t>(cur)] >= 0) break;
          }
          int ix = next_index[static_cast<std::size_t>(x)], ic = next_index[static_cast<std::size_t>(cur)];
          out[static_cast<std::size_t>(ix)] = ic;
          out[static_cast<std::size_t>(ic)] = ix;
        }
        for (int x : touched) {
          if (mark[static_cast<std::size_t>(x)] == -stamp) continue;
          ++loops;
          int prev = -1, cur = x;
          while (mark[static_cast<std::size_t>(cur)] != -stamp) {
            mark[static_cast<std::size_t>(cur)] = -stamp;
            auto& e = adj[static_cast<std::size_t>(cur)];
            int nx = (e[0] != prev) ? e[0] : e[1];
            prev = cur;
            cur = nx;
          }
        }
        R w = coef * c;
        if (loops) w = w * dp(loops);
        auto it = next.find(out);
        if (it == next.end()) next.emplace(std::move(out), w);
        else it->second = it->second + w;
      }
    }
    state.clear();
    for (auto& [k, c] : next)
      if (!is_zero(c)) state.emplace(k, c);
    open = std::move(next_open);
    if (state.empty()) return R(0);
  }
  R total(0);
  for (auto& [k, c] : state) total = total + c;
  return total * dp(free_loops);
}

// Crossing with counterclockwise slot labels: A-smoothing pairs slots 0-1 and 2-3, A^-1-smoothing 0-3 and 1-2.
template <CommutativeRing R>
NetVertex<R> crossing_vertex(const std::array<int, 4>& a, const R& A, const R& Ainv) {
  NetVertex<R> v;
  v.labels.assign(a.begin(), a.end());
  v.terms.push_back({Matching{1, 0, 3, 2}, A});
  v.terms.push_back({Matching{3, 2, 1, 0}, Ainv});
  return v;
}

// Projector box: slots 0..n-1 enter from one side, n..2n-1 leave on the other, in parallel order.
template <CommutativeRing R>
NetVertex<R> projector_vertex(const std::vector<int>& in, const std::vector<int>& out, const TLElement<R>& f) {
  NetVertex<R> v;
  v.labels = in;
  v.labels.insert(v.labels.end(), out.begin(), out.end());
  for (auto& [d, c] : f.terms) v.terms.push_back({d.m, c});
  return v;
}

// Kauffman bracket of a PD diagram by frontier contraction.
inline LaurentPoly network_bracket(const PDCode& d) {
  std::vector<NetVertex<LaurentPoly>> vs;
  LaurentPoly a = LaurentPoly::A(), ai = LaurentPoly::A(-1);
  for (auto& c : d.crossings()) vs.push_back(crossing_vertex(c.a, a, ai));
  return contract(vs, loop_value(), d.free_loops());
}

// Brute-force bracket: sum over all 2^c smoothings with union-find loop counting.
inline LaurentPoly state_sum_bracket(const std::vector<std::array<int, 4>>& xs, int free_loops) {
  if (xs.size() > 24) throw std::invalid_argument("state sum limited to 24 crossings");
  std::map<int, int> ids;
  for (auto& x : xs)
    for (int l : x) ids.emplace(l, static_cast<int>(ids.size()));
  std::size_t n = xs.size();
  std::vector<int> parent(ids.size());
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::map<std::pair<int, int>, long> tally;
  for (unsigned long s = 0; s < (1UL << n); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = static_cast<int>(ids.size());
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    };
    int e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = xs[i];
      int l0 = ids.at(x[0]), l1 = ids.at(x[1]), l2 = ids.at(x[2]), l3 = ids.at(x[3]);
      if (s >> i & 1UL) {
        unite(l0, l3);
        unite(l1, l2);
        --e;
      } else {
        unite(l0, l1);
        unite(l2, l3);
        ++e;
      }
    }
    ++tally[{e, comps}];
  }
  LaurentPoly delta = loop_value(), total;
  for (auto& [key, cnt] : tally) total += LaurentPoly::monomial(key.first, Rational(cnt)) * delta.pow(key.second);
  return total * delta.pow(free_loops);
}

inline LaurentPoly state_sum_bracket(const PDCode& d) {
  std::vector<std::array<int, 4>> xs;
  for (auto& c : d.crossings()) xs.push_back(c.a);
  return state_sum_bracket(xs, d.free_loops());
}

// ---------------------------------------------------------------------------
// Planar trivalent graphs colored by Jones-Wenzl projectors.

// Vertex with its three incident edges in counterclockwise order.
struct ColoredVertex {
  std::array<int, 3> edges;
};

// Evaluate a planar colored trivalent graph given by a rotation system. Edge e has color
// colors[e]; every edge joins two vertex slots. Returns (value times prod of projector scales, scale).
inline std::pair<LaurentPoly, LaurentPoly> evaluate_colored_graph(const std::vector<ColoredVertex>& vertices,
                                                                   const std::vector<int>& colors) {
  std::size_t ne = colors.size();
  // For each edge: the vertex-end occurrences in order (first = bottom of the box).
  std::vector<std::vector<std::pair<std::size_t, int>>> ends(ne);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int s = 0; s < 3; ++s) ends[static_cast<std::size_t>(vertices[v].edges[static_cast<std::size_t>(s)])].push_back({v, s});
  for (auto& e : ends)
    if (e.size() != 2) throw std::invalid_argument("colored graph edge must have two ends");
  int next = 1;
  // label[e][end][j]: label of strand j (left to right looking outward from that end's vertex).
  std::vector<std::array<std::vector<int>, 2>> label(ne);
  for (std::size_t e = 0; e < ne; ++e)
    for (int end = 0; end < 2; ++end) {
      label[e][static_cast<std::size_t>(end)].resize(static_cast<std::size_t>(colors[e]));
      for (auto& l : label[e][static_cast<std::size_t>(end)]) l = next++;
    }
  auto end_of = [&](std::size_t e, std::size_t v, int s) {
    return ends[e][0] == std::make_pair(v, s) ? 0 : 1;
  };
  std::map<int, int> glue;  // label -> label it is identified with at a vertex
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto& ed = vertices[v].edges;
    for (int s = 0; s < 3; ++s) {
      std::size_t e1 = static_cast<std::size_t>(ed[static_cast<std::size_t>(s)]);
      std::size_t e2 = static_cast<std::size_t>(ed[static_cast<std::size_t>((s + 1) % 3)]);
      std::size_t e3 = static_cast<std::size_t>(ed[static_cast<std::size_t>((s + 2) % 3)]);
      int x1 = colors[e1], x2 = colors[e2], x3 = colors[e3];
      if ((x1 + x2 + x3) % 2 || x1 > x2 + x3 || x2 > x1 + x3 || x3 > x1 + x2)
        throw std::invalid_argument("colored graph vertex is not admissible");
      int m = (x1 + x2 - x3) / 2;
      const auto& l1 = label[e1][static_cast<std::size_t>(end_of(e1, v, s))];
      const auto& l2 = label[e2][static_cast<std::size_t>(end_of(e2, v, (s + 1) % 3))];
      for (int t = 0; t < m; ++t) glue[l1[static_cast<std::size_t>(m - 1 - t)]] = l2[static_cast<std::size_t>(x2 - m + t)];
    }
  }
  // Canonical label per glued pair.
  auto canon = [&](int l) {
    auto it = glue.find(l);
    return it == glue.end() ? l : it->second;
  };
  std::vector<NetVertex<LaurentPoly>> vs;
  LaurentPoly scale(1);
  for (std::size_t e = 0; e < ne; ++e) {
    int x = colors[e];
    if (x == 0) continue;
    auto [sc, f] = jones_wenzl_cleared(x);
    scale *= sc;
    std::vector<int> in, out(static_cast<std::size_t>(x));
    for (int j = 0; j < x; ++j) in.push_back(canon(label[e][0][static_cast<std::size_t>(j)]));
    // Looking outward from the far end reverses left and right.
    for (int j = 0; j < x; ++j) out[static_cast<std::size_t>(x - 1 - j)] = canon(label[e][1][static_cast<std::size_t>(j)]);
    vs.push_back(projector_vertex(in, out, f));
  }
  if (vs.empty()) return {LaurentPoly(1), scale};
  return {contract(vs, loop_value()), scale};
}

}  // namespace skein
