#pragma once

#include "errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace skein {

// ---------------------------------------------------------------------------
// Slice words: tangles in a strip, read bottom to top.

struct SliceToken {
  enum class Kind { Cup, Cap, CrossPos, CrossNeg };
  Kind kind;
  int pos;  // 1-based

  std::string str() const {
    switch (kind) {
      case Kind::Cup: return "cup " + std::to_string(pos);
      case Kind::Cap: return "cap " + std::to_string(pos);
      case Kind::CrossPos: return "cross+ " + std::to_string(pos);
      case Kind::CrossNeg: return "cross- " + std::to_string(pos);
    }
    return "";
  }
  friend bool operator==(const SliceToken&, const SliceToken&) = default;
};

class SliceWord {
public:
  SliceWord() = default;
  SliceWord(int bottom, std::vector<SliceToken> tokens) : bottom_(bottom), tokens_(std::move(tokens)) { validate(); }

  int bottom() const { return bottom_; }
  int half_width() const { return bottom_ / 2; }
  const std::vector<SliceToken>& tokens() const { return tokens_; }
  bool closed() const { return bottom_ == 0; }
  std::size_t crossing_count() const {
    return static_cast<std::size_t>(std::count_if(tokens_.begin(), tokens_.end(), [](const SliceToken& t) {
      return t.kind == SliceToken::Kind::CrossPos || t.kind == SliceToken::Kind::CrossNeg;
    }));
  }
  int max_width() const {
    int w = bottom_, m = bottom_;
    for (auto& t : tokens_) {
      if (t.kind == SliceToken::Kind::Cup) w += 2;
      if (t.kind == SliceToken::Kind::Cap) w -= 2;
      m = std::max(m, w);
    }
    return m;
  }

  // Grammar: "2n=<even>; tok; tok; ..." with tok in {cup i, cap i, cross+ i, cross- i}.
  // Newlines also separate tokens; '#' starts a comment running to end of line.
  static SliceWord parse(const std::string& text) {
    std::string cleaned;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      auto h = line.find('#');
      if (h != std::string::npos) line = line.substr(0, h);
      cleaned += line + ";";
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : cleaned) {
      if (ch == ';') {
        auto b = cur.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
          auto e = cur.find_last_not_of(" \t\r");
          parts.push_back(cur.substr(b, e - b + 1));
        }
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (parts.empty()) throw ValidationError("empty slice word");
    const std::string& head = parts[0];
    if (head.rfind("2n", 0) != 0) throw ValidationError("slice word must start with 2n=<count>, got '" + head + "'");
    auto eq = head.find('=');
    if (eq == std::string::npos) throw ValidationError("missing '=' in header '" + head + "'");
    int bottom = parse_int(head.substr(eq + 1), head);
    std::vector<SliceToken> toks;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::istringstream ts(parts[i]);
      std::string kind, pos, extra;
      ts >> kind >> pos;
      if (ts >> extra) throw ValidationError("trailing text in token '" + parts[i] + "'");
      SliceToken t{};
      if (kind == "cup") t.kind = SliceToken::Kind::Cup;
      else if (kind == "cap") t.kind = SliceToken::Kind::Cap;
      else if (kind == "cross+") t.kind = SliceToken::Kind::CrossPos;
      else if (kind == "cross-" || kind == "cross\xE2\x88\x92") t.kind = SliceToken::Kind::CrossNeg;
      else throw ValidationError("unknown token '" + parts[i] + "'");
      if (pos.empty()) throw ValidationError("missing position in token '" + parts[i] + "'");
      t.pos = parse_int(pos, parts[i]);
      toks.push_back(t);
    }
    return SliceWord(bottom, std::move(toks));
  }

  std::string str() const {
    std::string s = "2n=" + std::to_string(bottom_);
    for (auto& t : tokens_) s += "; " + t.str();
    return s;
  }

  // Stack: this word below, other above.
  SliceWord then(const SliceWord& other) const {
    if (other.bottom_ != bottom_) throw ValidationError("concatenating slice words of different width");
    auto t = tokens_;
    t.insert(t.end(), other.tokens_.begin(), other.tokens_.end());
    return SliceWord(bottom_, std::move(t));
  }

  // Cut the closed-up tangle after the first k tokens instead; the new bottom is the width there.
  SliceWord rotate(std::size_t k) const {
    if (k > tokens_.size()) throw ValidationError("rotation past the end of the slice word");
    int w = bottom_;
    for (std::size_t i = 0; i < k; ++i) {
      if (tokens_[i].kind == SliceToken::Kind::Cup) w += 2;
      if (tokens_[i].kind == SliceToken::Kind::Cap) w -= 2;
    }
    std::vector<SliceToken> t(tokens_.begin() + static_cast<std::ptrdiff_t>(k), tokens_.end());
    t.insert(t.end(), tokens_.begin(), tokens_.begin() + static_cast<std::ptrdiff_t>(k));
    return SliceWord(w, std::move(t));
  }

  // Reflection in the horizontal plane: crossing types swap.
  SliceWord mirror() const {
    auto t = tokens_;
    for (auto& x : t) {
      if (x.kind == SliceToken::Kind::CrossPos) x.kind = SliceToken::Kind::CrossNeg;
      else if (x.kind == SliceToken::Kind::CrossNeg) x.kind = SliceToken::Kind::CrossPos;
    }
    return SliceWord(bottom_, std::move(t));
  }

  friend bool operator==(const SliceWord&, const SliceWord&) = default;

private:
  static int parse_int(const std::string& s, const std::string& ctx) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("missing integer in '" + ctx + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s.substr(b), &used);
    } catch (...) {
      throw ValidationError("bad integer in '" + ctx + "'");
    }
    if (s.substr(b + used).find_first_not_of(" \t") != std::string::npos)
      throw ValidationError("bad integer in '" + ctx + "'");
    return v;
  }

  void validate() const {
    if (bottom_ < 0 || bottom_ % 2) throw ValidationError("odd boundary count 2n=" + std::to_string(bottom_));
    int w = bottom_;
    for (std::size_t k = 0; k < tokens_.size(); ++k) {
      const auto& t = tokens_[k];
      std::string where = "token " + std::to_string(k + 1) + " '" + t.str() + "'";
      if (t.pos < 1) throw ValidationError("position must be positive at " + where);
      switch (t.kind) {
        case SliceToken::Kind::Cup:
          if (t.pos > w + 1) throw ValidationError("position exceeds width at " + where);
          w += 2;
          break;
        case SliceToken::Kind::Cap:
          if (w < 2) throw ValidationError("width underflow at " + where);
          if (t.pos + 1 > w) throw ValidationError("position exceeds width at " + where);
          w -= 2;
          break;
        default:
          if (t.pos + 1 > w) throw ValidationError("position exceeds width at " + where);
      }
    }
    if (w != bottom_)
      throw ValidationError("dangling arc: final width " + std::to_string(w) + " differs from 2n=" + std::to_string(bottom_));
  }

  int bottom_ = 0;
  std::vector<SliceToken> tokens_;
};

// ---------------------------------------------------------------------------
// PD codes. X[i,j,k,l]: labels counterclockwise starting at the incoming under-strand.
// Positive crossing: the over-strand runs from l to j.

struct PDCrossing {
  std::array<int, 4> a{};
  int sign = 1;
  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

class PDCode {
public:
  PDCode() = default;
  PDCode(std::vector<PDCrossing> x, int loops = 0) : x_(std::move(x)), loops_(loops) { validate(); }

  const std::vector<PDCrossing>& crossings() const { return x_; }
  int free_loops() const { return loops_; }
  std::size_t size() const { return x_.size(); }

  int writhe() const {
    int w = 0;
    for (auto& c : x_) w += c.sign;
    return w;
  }
  int components() const { return static_cast<int>(traverse().size()) + loops_; }
  bool is_knot() const { return components() == 1; }

  std::set<int> labels() const {
    std::set<int> s;
    for (auto& c : x_)
      for (int l : c.a) s.insert(l);
    return s;
  }

  // JSON: [[a,b,c,d,"+"],...] or {"crossings":[...],"loops":n}.
  static PDCode parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text, nullptr, true, true);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("PD code is not valid JSON: ") + e.what());
    }
    int loops = 0;
    nlohmann::json arr = j;
    if (j.is_object()) {
      if (!j.contains("crossings")) throw ValidationError("PD object needs a 'crossings' array");
      arr = j["crossings"];
      if (j.contains("loops")) loops = j["loops"].get<int>();
    }
    if (!arr.is_array()) throw ValidationError("PD code must be an array of crossings");
    std::vector<PDCrossing> xs;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto& c = arr[k];
      std::string where = "crossing " + std::to_string(k + 1);
      if (!c.is_array() || c.size() != 5) throw ValidationError(where + " must be [a,b,c,d,sign]");
      PDCrossing x;
      for (int i = 0; i < 4; ++i) {
        if (!c[static_cast<std::size_t>(i)].is_number_integer()) throw ValidationError(where + " has a non-integer label");
        x.a[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)].get<int>();
      }
      if (!c[4].is_string()) throw ValidationError(where + " needs sign \"+\" or \"-\"");
      std::string s = c[4].get<std::string>();
      if (s == "+") x.sign = 1;
      else if (s == "-") x.sign = -1;
      else throw ValidationError(where + " has bad sign '" + s + "'");
      xs.push_back(x);
    }
    return PDCode(std::move(xs), loops);
  }

  std::string str() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : x_) arr.push_back({c.a[0], c.a[1], c.a[2], c.a[3], c.sign > 0 ? "+" : "-"});
    if (loops_ == 0) return arr.dump();
    nlohmann::json o;
    o["crossings"] = arr;
    o["loops"] = loops_;
    return o.dump();
  }

  friend bool operator==(const PDCode&, const PDCode&) = default;

  PDCode mirror() const {
    std::vector<PDCrossing> out;
    for (auto& c : x_) {
      PDCrossing m;
      // The over-strand becomes the under-strand; start at its incoming end.
      if (c.sign > 0) m.a = {c.a[3], c.a[0], c.a[1], c.a[2]};
      else m.a = {c.a[1], c.a[2], c.a[3], c.a[0]};
      m.sign = -c.sign;
      out.push_back(m);
    }
    return PDCode(std::move(out), loops_);
  }

  // Add |w| kinks of the opposite sign on one arc so the writhe becomes zero.
  PDCode normalize_writhe() const {
    if (!is_knot()) throw ValidationError("writhe normalization needs a knot diagram, not a link");
    int w = writhe();
    PDCode d = *this;
    for (int k = 0; k < std::abs(w); ++k) d = d.add_kink(w > 0 ? -1 : 1);
    return d;
  }

  PDCode add_kink(int sign) const {
    if (x_.empty()) {
      // Kink on a crossingless circle: a one-crossing diagram with two loop arcs.
      std::vector<PDCrossing> xs{sign > 0 ? PDCrossing{{1, 1, 2, 2}, 1} : PDCrossing{{1, 2, 2, 1}, -1}};
      if (loops_ < 1) throw ValidationError("no arc to place a kink on");
      return PDCode(std::move(xs), loops_ - 1);
    }
    auto heads = head_slots();
    int a = *labels().begin();
    int fresh = *labels().rbegin() + 1;
    int a_out = fresh, loop = fresh + 1;
    std::vector<PDCrossing> xs = x_;
    auto [hc, hs] = heads.at(a);
    xs[hc].a[hs] = a_out;
    if (sign > 0) xs.push_back(PDCrossing{{a, a_out, loop, loop}, 1});
    else xs.push_back(PDCrossing{{a, loop, loop, a_out}, -1});
    return PDCode(std::move(xs), loops_);
  }

  // Blackboard cable with `strands` parallel copies of every component; `braid` (generators +-t on the
  // cable positions, t 1-based) is inserted into the copies of one arc, or closed up if there are no crossings.
  // If cut is given it receives, per cable position, the label running into the head of that arc.
  PDCode cable(int strands, const std::vector<int>& braid = {}, std::vector<int>* cut = nullptr) const {
    if (strands < 1) throw ValidationError("cable needs at least one strand");
    if (x_.empty()) {
      if (loops_ != 1 && !braid.empty()) throw ValidationError("braid insertion needs a knot");
      if (cut) throw ValidationError("cut labels need a diagram with crossings");
      if (braid.empty()) return PDCode({}, loops_ * strands);
      return braid_closure(strands, braid);
    }
    if (!braid.empty() && !is_knot()) throw ValidationError("braid insertion needs a knot diagram");
    auto pos = positive_over_direction();
    std::map<std::pair<int, int>, int> copy_label;
    int next = 1;
    auto lab = [&](int arc, int copy) {
      auto key = std::make_pair(arc, copy);
      auto it = copy_label.find(key);
      if (it != copy_label.end()) return it->second;
      copy_label[key] = next;
      return next++;
    };
    for (int l : labels())
      for (int t = 1; t <= strands; ++t) lab(l, t);
    // Braid region sits on the copies of the smallest arc, just before its head.
    int cut_arc = *labels().begin();
    std::map<int, int> cut_replacement;  // copy -> label arriving at the head crossing
    std::vector<PDCrossing> out;
    if (!braid.empty()) {
      std::vector<int> cur(static_cast<std::size_t>(strands) + 1);
      for (int t = 1; t <= strands; ++t) cur[static_cast<std::size_t>(t)] = lab(cut_arc, t);
      for (int g : braid) {
        int t = std::abs(g);
        if (t < 1 || t >= strands) throw ValidationError("braid generator out of range");
        int n1 = next++, n2 = next++;
        int& left = cur[static_cast<std::size_t>(t)];
        int& right = cur[static_cast<std::size_t>(t + 1)];
        if (g > 0) out.push_back(PDCrossing{{right, n2, n1, left}, 1});
        else out.push_back(PDCrossing{{left, right, n2, n1}, -1});
        left = n1;
        right = n2;
      }
      for (int t = 1; t <= strands; ++t) cut_replacement[t] = cur[static_cast<std::size_t>(t)];
    }
    if (cut) {
      cut->clear();
      for (int t = 1; t <= strands; ++t) cut->push_back(braid.empty() ? lab(cut_arc, t) : cut_replacement.at(t));
    }
    auto heads = head_slots();
    auto end_label = [&](std::size_t ci, int slot, int arc, int copy) {
      if (!braid.empty() && arc == cut_arc && heads.at(arc) == std::make_pair(ci, slot))
        return cut_replacement.at(copy);
      return lab(arc, copy);
    };
    int m = strands;
    for (std::size_t ci = 0; ci < x_.size(); ++ci) {
      const auto& c = x_[ci];
      bool positive = pos[ci];
      // Grid: columns x = 1..m west to east (under-strand heading north), rows y = 1..m south to north.
      auto row_copy = [&](int y) { return positive ? m + 1 - y : y; };
      std::vector<std::vector<int>> v(static_cast<std::size_t>(m) + 1, std::vector<int>(static_cast<std::size_t>(m) + 1));
      std::vector<std::vector<int>> h(static_cast<std::size_t>(m) + 1, std::vector<int>(static_cast<std::size_t>(m) + 1));
      for (int x = 1; x <= m; ++x) {
        v[x][0] = end_label(ci, 0, c.a[0], x);
        v[x][m] = end_label(ci, 2, c.a[2], x);
        for (int y = 1; y < m; ++y) v[x][y] = next++;
      }
      for (int y = 1; y <= m; ++y) {
        h[y][0] = end_label(ci, 3, c.a[3], row_copy(y));
        h[y][m] = end_label(ci, 1, c.a[1], row_copy(y));
        for (int x = 1; x < m; ++x) h[y][x] = next++;
      }
      for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y) out.push_back(PDCrossing{{v[x][y - 1], h[y][x], v[x][y], h[y][x - 1]}, c.sign});
    }
    return PDCode(std::move(out), loops_ * strands);
  }

  // Closure of a braid on m strands (generators +-t, positive = A-smoothing is the identity).
  static PDCode braid_closure(int m, const std::vector<int>& braid) {
    if (braid.empty()) return PDCode({}, m);
    std::vector<int> start(static_cast<std::size_t>(m) + 1), cur(static_cast<std::size_t>(m) + 1);
    int next = 1;
    for (int t = 1; t <= m; ++t) start[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t)] = next++;
    std::vector<PDCrossing> out;
    std::vector<std::pair<std::size_t, int>> last_use(static_cast<std::size_t>(m) + 1, {SIZE_MAX, -1});
    for (int g : braid) {
      int t = std::abs(g);
      if (t < 1 || t >= m) throw ValidationError("braid generator out of range");
      int n1 = next++, n2 = next++;
      int left = cur[static_cast<std::size_t>(t)], right = cur[static_cast<std::size_t>(t + 1)];
      if (g > 0) out.push_back(PDCrossing{{right, n2, n1, left}, 1});
      else out.push_back(PDCrossing{{left, right, n2, n1}, -1});
      cur[static_cast<std::size_t>(t)] = n1;
      cur[static_cast<std::size_t>(t + 1)] = n2;
    }
    // Close: final label on each position is identified with the starting label.
    std::map<int, int> rename;
    int free = 0;
    for (int t = 1; t <= m; ++t) {
      if (cur[static_cast<std::size_t>(t)] == start[static_cast<std::size_t>(t)]) ++free;
      else rename[cur[static_cast<std::size_t>(t)]] = start[static_cast<std::size_t>(t)];
    }
    for (auto& c : out)
      for (int& l : c.a) {
        auto it = rename.find(l);
        if (it != rename.end()) l = it->second;
      }
    return PDCode(std::move(out), free);
  }

  // Connected sum along the smallest arc of each summand.
  static PDCode connected_sum(const PDCode& p, const PDCode& q) {
    if (!p.is_knot() || !q.is_knot()) throw ValidationError("connected sum needs knot diagrams");
    if (p.x_.empty()) return q;
    if (q.x_.empty()) return p;
    int shift = *p.labels().rbegin();
    std::vector<PDCrossing> qs = q.x_;
    for (auto& c : qs)
      for (int& l : c.a) l += shift;
    PDCode q2(qs, 0);
    int a = *p.labels().begin(), b = *q2.labels().begin();
    auto hp = p.head_slots().at(a);
    auto hq = q2.head_slots().at(b);
    std::vector<PDCrossing> xs = p.x_;
    xs[hp.first].a[static_cast<std::size_t>(hp.second)] = b;
    qs[hq.first].a[static_cast<std::size_t>(hq.second)] = a;
    xs.insert(xs.end(), qs.begin(), qs.end());
    return PDCode(std::move(xs), 0);
  }

  // Build from crossings given as counterclockwise slot labels with the under-strand on slots 0 and 2;
  // each component is oriented by traversal and every crossing is rotated and signed accordingly.
  static PDCode from_unoriented(const std::vector<std::array<int, 4>>& xs, int loops) {
    std::map<int, std::vector<std::pair<std::size_t, int>>> occ;
    for (std::size_t ci = 0; ci < xs.size(); ++ci)
      for (int s = 0; s < 4; ++s) occ[xs[ci][static_cast<std::size_t>(s)]].push_back({ci, s});
    for (auto& [l, o] : occ)
      if (o.size() != 2) throw ValidationError("arc label " + std::to_string(l) + " does not appear twice");
    std::vector<int> under_entry(xs.size(), -1), over_entry(xs.size(), -1);
    std::set<std::pair<std::size_t, int>> seen;
    for (std::size_t ci = 0; ci < xs.size(); ++ci)
      for (int s = 0; s < 4; ++s) {
        if (seen.count({ci, s})) continue;
        std::pair<std::size_t, int> at{ci, s};
        while (!seen.count(at)) {
          seen.insert(at);
          int exit = (at.second + 2) % 4;
          seen.insert({at.first, exit});
          if (at.second % 2 == 0) under_entry[at.first] = at.second;
          else over_entry[at.first] = at.second;
          int l = xs[at.first][static_cast<std::size_t>(exit)];
          const auto& o = occ[l];
          at = (o[0] == std::make_pair(at.first, exit)) ? o[1] : o[0];
        }
      }
    std::vector<PDCrossing> out;
    for (std::size_t ci = 0; ci < xs.size(); ++ci) {
      auto a = xs[ci];
      int over = over_entry[ci];
      if (under_entry[ci] == 2) {
        a = {a[2], a[3], a[0], a[1]};
        over = (over + 2) % 4;
      }
      out.push_back(PDCrossing{a, over == 3 ? 1 : -1});
    }
    return PDCode(std::move(out), loops);
  }

  // Slot (crossing, position) where each arc ends, following the orientation.
  std::map<int, std::pair<std::size_t, int>> head_slots() const {
    std::map<int, std::pair<std::size_t, int>> heads;
    for (auto& comp : traverse())
      for (auto& [ci, entry] : comp.passages) {
        int slot = comp.forward ? entry : (entry + 2) % 4;
        heads[x_[ci].a[static_cast<std::size_t>(slot)]] = {ci, slot};
      }
    return heads;
  }

  // For each crossing: true when the over-strand runs from l to j under the derived orientation.
  std::vector<bool> positive_over_direction() const {
    std::vector<bool> pos(x_.size(), false);
    for (auto& comp : traverse())
      for (auto& [ci, entry] : comp.passages) {
        int slot = comp.forward ? entry : (entry + 2) % 4;
        if (slot == 3) pos[ci] = true;
        if (slot == 1) pos[ci] = false;
      }
    return pos;
  }

private:
  struct Component {
    std::vector<std::pair<std::size_t, int>> passages;  // (crossing, entry slot) in traversal order
    bool forward = true;
  };

  std::vector<Component> traverse() const {
    std::map<int, std::vector<std::pair<std::size_t, int>>> occ;
    for (std::size_t ci = 0; ci < x_.size(); ++ci)
      for (int s = 0; s < 4; ++s) occ[x_[ci].a[static_cast<std::size_t>(s)]].push_back({ci, s});
    std::set<std::pair<std::size_t, int>> seen;
    std::vector<Component> comps;
    for (std::size_t ci = 0; ci < x_.size(); ++ci)
      for (int s = 0; s < 4; ++s) {
        if (seen.count({ci, s})) continue;
        Component comp;
        std::pair<std::size_t, int> at{ci, s};
        while (!seen.count(at)) {
          seen.insert(at);
          int exit = (at.second + 2) % 4;
          seen.insert({at.first, exit});
          comp.passages.push_back(at);
          int l = x_[at.first].a[static_cast<std::size_t>(exit)];
          const auto& o = occ[l];
          at = (o[0] == std::make_pair(at.first, exit)) ? o[1] : o[0];
        }
        bool fwd = false, bwd = false;
        for (auto& [c, e] : comp.passages) {
          if (e == 0) fwd = true;
          if (e == 2) bwd = true;
        }
        if (fwd && bwd) throw ValidationError("inconsistent under-strand orientation in PD code");
        if (fwd || bwd) {
          comp.forward = fwd;
        } else {
          auto [c, e] = comp.passages.front();
          bool pos_if_forward = (e == 3);
          comp.forward = (x_[c].sign > 0) == pos_if_forward;
        }
        comps.push_back(comp);
      }
    return comps;
  }

  void validate() const {
    if (loops_ < 0) throw ValidationError("negative loop count");
    std::map<int, int> count;
    for (auto& c : x_)
      for (int l : c.a) ++count[l];
    for (auto& [l, n] : count)
      if (n != 2) throw ValidationError("arc label " + std::to_string(l) + " appears " + std::to_string(n) + " times");
    auto pos = positive_over_direction();
    for (std::size_t ci = 0; ci < x_.size(); ++ci)
      if ((x_[ci].sign > 0) != pos[ci])
        throw ValidationError("crossing " + std::to_string(ci + 1) + " sign disagrees with the strand orientation");
  }

  std::vector<PDCrossing> x_;
  int loops_ = 0;
};

// Braid words on cable positions.
namespace braids {

inline std::vector<int> full_twist(int first, int count) {
  std::vector<int> w;
  for (int r = 0; r < count; ++r)
    for (int t = first; t < first + count - 1; ++t) w.push_back(t);
  return w;
}

// Bundle of `a` strands (left) crossing a bundle of `b` strands (right); each pair crosses once.
inline std::vector<int> bundle_cross(int a, int b, int sign) {
  std::vector<int> w;
  for (int i = a; i >= 1; --i)
    for (int t = i; t < i + b; ++t) w.push_back(sign * t);
  return w;
}

// k full twists of a left bundle of size a around a right bundle of size b.
inline std::vector<int> bundle_twist(int a, int b, int k) {
  std::vector<int> w;
  int s = k >= 0 ? 1 : -1;
  for (int r = 0; r < std::abs(k); ++r) {
    auto x = bundle_cross(a, b, s);
    auto y = bundle_cross(b, a, s);
    w.insert(w.end(), x.begin(), x.end());
    w.insert(w.end(), y.begin(), y.end());
  }
  return w;
}

}  // namespace braids

// ---------------------------------------------------------------------------
// Knot references: U, RT, LT, F8, sums with '#', mirrors with '-', and doubles D(k,J).

struct KnotRef {
  enum class Kind { Atlas, Double, Sum, Mirror };
  Kind kind = Kind::Atlas;
  std::string name;  // Atlas
  int k = 0;         // Double
  std::vector<std::shared_ptr<const KnotRef>> args;

  static std::shared_ptr<const KnotRef> atlas(const std::string& n) {
    auto r = std::make_shared<KnotRef>();
    r->name = n;
    return r;
  }
  static std::shared_ptr<const KnotRef> twisted_double(int k, std::shared_ptr<const KnotRef> j) {
    auto r = std::make_shared<KnotRef>();
    r->kind = Kind::Double;
    r->k = k;
    r->args = {std::move(j)};
    return r;
  }
  static std::shared_ptr<const KnotRef> sum(std::shared_ptr<const KnotRef> a, std::shared_ptr<const KnotRef> b) {
    auto r = std::make_shared<KnotRef>();
    r->kind = Kind::Sum;
    r->args = {std::move(a), std::move(b)};
    return r;
  }
  static std::shared_ptr<const KnotRef> mirror_of(std::shared_ptr<const KnotRef> a) {
    auto r = std::make_shared<KnotRef>();
    r->kind = Kind::Mirror;
    r->args = {std::move(a)};
    return r;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Atlas: return name;
      case Kind::Double: return "D(" + std::to_string(k) + "," + args[0]->str() + ")";
      case Kind::Sum: return args[0]->str() + "#" + args[1]->str();
      case Kind::Mirror: return "-" + wrap(*args[0]);
    }
    return "";
  }

  static std::shared_ptr<const KnotRef> parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t i = 0;
    auto r = parse_sum(s, i);
    if (i != s.size()) throw ValidationError("unexpected text in knot reference '" + text + "' at offset " + std::to_string(i));
    return r;
  }

private:
  static std::string wrap(const KnotRef& r) { return r.kind == Kind::Sum ? "(" + r.str() + ")" : r.str(); }

  static std::shared_ptr<const KnotRef> parse_sum(const std::string& s, std::size_t& i) {
    auto left = parse_term(s, i);
    while (i < s.size() && s[i] == '#') {
      ++i;
      left = sum(left, parse_term(s, i));
    }
    return left;
  }
  static std::shared_ptr<const KnotRef> parse_term(const std::string& s, std::size_t& i) {
    if (i >= s.size()) throw ValidationError("knot reference ends early");
    if (s[i] == '-') {
      ++i;
      return mirror_of(parse_term(s, i));
    }
    if (s[i] == '(') {
      ++i;
      auto r = parse_sum(s, i);
      if (i >= s.size() || s[i] != ')') throw ValidationError("missing ')' in knot reference");
      ++i;
      return r;
    }
    if (s.compare(i, 2, "D(") == 0) {
      i += 2;
      std::size_t st = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st]))))
        throw ValidationError("D(k,J) needs an integer k");
      int k = std::stoi(s.substr(st, i - st));
      if (i >= s.size() || s[i] != ',') throw ValidationError("D(k,J) needs a comma");
      ++i;
      auto j = parse_sum(s, i);
      if (i >= s.size() || s[i] != ')') throw ValidationError("missing ')' in D(k,J)");
      ++i;
      return twisted_double(k, j);
    }
    // Knots that are twisted doubles of the unknot.
    for (auto [n, k, m] : {std::tuple{"6_1", 2, false}, std::tuple{"8_1", 3, false}, std::tuple{"5_2", 2, true}}) {
      std::string name(n);
      if (s.compare(i, name.size(), name) == 0) {
        i += name.size();
        auto d = twisted_double(k, atlas("U"));
        return m ? mirror_of(d) : d;
      }
    }
    for (const char* n : {"RT", "LT", "F8", "U"}) {
      std::string name(n);
      if (s.compare(i, name.size(), name) == 0) {
        i += name.size();
        return atlas(name);
      }
    }
    throw ValidationError("unknown knot symbol at '" + s.substr(i) + "'");
  }
};

using KnotPtr = std::shared_ptr<const KnotRef>;

// Stored diagrams for atlas knots (before writhe normalization).
namespace atlas {

// Left-handed trefoil, writhe -3.
inline PDCode left_trefoil() { return PDCode({{{1, 4, 2, 5}, -1}, {{3, 6, 4, 1}, -1}, {{5, 2, 6, 3}, -1}}); }
inline PDCode right_trefoil() { return left_trefoil().mirror(); }
inline PDCode figure_eight() {
  return PDCode({{{4, 2, 5, 1}, 1}, {{8, 6, 1, 5}, 1}, {{6, 3, 7, 4}, -1}, {{2, 7, 3, 8}, -1}});
}
inline PDCode unknot() { return PDCode({}, 1); }

inline PDCode diagram(const std::string& name) {
  if (name == "U") return unknot();
  if (name == "RT") return right_trefoil();
  if (name == "LT") return left_trefoil();
  if (name == "F8") return figure_eight();
  throw ValidationError("no stored diagram for '" + name + "'");
}

}  // namespace atlas

}  // namespace skein
