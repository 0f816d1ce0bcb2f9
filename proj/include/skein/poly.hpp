#pragma once

#include "ratfunc.hpp"
#include "cyclo.hpp"

#include <concepts>
#include <functional>
#include <sstream>

namespace skein {

template <class R>
concept CommutativeRing = requires(R a, R b) {
  R(0);
  R(1);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

template <class F>
concept Field = CommutativeRing<F> && requires(F a) {
  { inverse(a) } -> std::convertible_to<F>;
};

namespace poly_detail {
template <class T>
bool zero(const T& t) {
  return is_zero(t);
}
}  // namespace poly_detail

template <class R>
std::string to_text(const R& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Dense univariate polynomial in x over R; index = degree.
template <CommutativeRing R>
class RingPoly {
public:
  RingPoly() = default;
  RingPoly(int c) : RingPoly(R(c)) {}
  RingPoly(const R& c) {
    if (!poly_detail::zero(c)) c_.push_back(c);
  }
  explicit RingPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static RingPoly x(int k = 1) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, R(0));
    v.back() = R(1);
    return RingPoly(std::move(v));
  }
  static RingPoly monomial(int k, const R& c) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, R(0));
    v.back() = c;
    return RingPoly(std::move(v));
  }

  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(int k) const { return (k < 0 || k > degree()) ? R(0) : c_[static_cast<std::size_t>(k)]; }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    std::vector<R> v(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return RingPoly(std::move(v));
  }
  RingPoly operator-() const {
    RingPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend RingPoly operator-(const RingPoly& a, const RingPoly& b) { return a + (-b); }
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (poly_detail::zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (poly_detail::zero(b.c_[j])) continue;
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return RingPoly(std::move(v));
  }
  RingPoly& operator+=(const RingPoly& o) { return *this = *this + o; }
  RingPoly& operator-=(const RingPoly& o) { return *this = *this - o; }
  RingPoly& operator*=(const RingPoly& o) { return *this = *this * o; }
  RingPoly scaled(const R& s) const {
    RingPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  friend bool operator==(const RingPoly& a, const RingPoly& b) { return a.c_ == b.c_; }

  R eval(const R& v) const {
    R s(0);
    for (std::size_t i = c_.size(); i-- > 0;) s = s * v + c_[i];
    return s;
  }
  RingPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * R(static_cast<int>(i)));
    return RingPoly(std::move(v));
  }
  RingPoly pow(int n) const {
    RingPoly r(R(1)), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<R>()))>;
    std::vector<S> v;
    for (auto& c : c_) v.push_back(f(c));
    return RingPoly<S>(std::move(v));
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (poly_detail::zero(c_[k])) continue;
      if (!first) out += " + ";
      first = false;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (c_[k] == R(1) && k > 0) out += mono;
      else out += "(" + to_text(c_[k]) + ")" + (k ? "*" + mono : "");
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const RingPoly& p) { return os << p.str(); }

  // Inverse of str(): terms "(c)", "(c)*x^k", "x^k" joined by " + ".
  static RingPoly parse(const std::string& text, const std::function<R(const std::string&)>& parse_coeff,
                        const std::string& var = "x") {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && ch == '+' && (cur.find_first_not_of(' ') != std::string::npos)) {
        parts.push_back(cur);
        cur.clear();
        continue;
      }
      cur += ch;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in polynomial");
    parts.push_back(cur);
    RingPoly out;
    for (auto part : parts) {
      auto b = part.find_first_not_of(' ');
      auto e = part.find_last_not_of(' ');
      if (b == std::string::npos) throw std::invalid_argument("empty polynomial term");
      part = part.substr(b, e - b + 1);
      if (part == "0") continue;
      R c(1);
      std::string mono;
      if (part[0] == '(') {
        auto close = matching_paren(part);
        c = parse_coeff(part.substr(1, close - 1));
        std::string rest = part.substr(close + 1);
        if (!rest.empty()) {
          if (rest[0] != '*') throw std::invalid_argument("bad polynomial term: " + part);
          mono = rest.substr(1);
        }
      } else {
        mono = part;
      }
      int k = 0;
      if (!mono.empty()) {
        if (mono.rfind(var, 0) != 0) throw std::invalid_argument("bad monomial: " + mono);
        std::string ex = mono.substr(var.size());
        if (ex.empty()) k = 1;
        else if (ex[0] == '^') k = std::stoi(ex.substr(1));
        else throw std::invalid_argument("bad monomial: " + mono);
        if (k < 0) throw std::invalid_argument("negative exponent in polynomial");
      }
      out += monomial(k, c);
    }
    return out;
  }

private:
  static std::size_t matching_paren(const std::string& s) {
    int d = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++d;
      if (s[i] == ')' && --d == 0) return i;
    }
    throw std::invalid_argument("unbalanced parentheses: " + s);
  }
  void trim() {
    while (!c_.empty() && poly_detail::zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <CommutativeRing R>
bool is_zero(const RingPoly<R>& p) {
  return p.is_zero();
}

// Division with remainder over a field.
template <Field F>
std::pair<RingPoly<F>, RingPoly<F>> divmod(const RingPoly<F>& a, const RingPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RingPoly<F>(), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
  F inv = inverse(b.leading());
  const auto& bc = b.coeffs();
  for (std::size_t k = q.size(); k-- > 0;) {
    F f = r[k + bc.size() - 1] * inv;
    q[k] = f;
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] = r[k + j] - f * bc[j];
  }
  r.resize(bc.size() - 1, F(0));
  return {RingPoly<F>(std::move(q)), RingPoly<F>(std::move(r))};
}

template <Field F>
RingPoly<F> make_monic(const RingPoly<F>& a) {
  if (a.is_zero()) return a;
  return a.scaled(inverse(a.leading()));
}

template <Field F>
RingPoly<F> poly_gcd(RingPoly<F> a, RingPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Yun's algorithm: returns (factor, multiplicity) with squarefree, pairwise coprime monic factors.
template <Field F>
std::vector<std::pair<RingPoly<F>, int>> squarefree_factorization(const RingPoly<F>& f) {
  std::vector<std::pair<RingPoly<F>, int>> out;
  if (f.degree() <= 0) return out;
  RingPoly<F> a = make_monic(f);
  RingPoly<F> d = a.derivative();
  RingPoly<F> g = poly_gcd(a, d);
  RingPoly<F> b = divmod(a, g).first;
  RingPoly<F> c = divmod(d, g).first;
  RingPoly<F> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RingPoly<F> h = poly_gcd(b, e);
    if (h.degree() > 0) out.emplace_back(make_monic(h), i);
    b = divmod(b, h).first;
    c = divmod(e, h).first;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

// Power sums p_1..p_m of the roots of a monic polynomial (Newton identities, division free).
template <CommutativeRing R>
std::vector<R> power_sums(const RingPoly<R>& f, int m) {
  if (!f.is_monic()) throw std::invalid_argument("power sums need a monic polynomial");
  int n = f.degree();
  std::vector<R> p(static_cast<std::size_t>(m) + 1, R(0));
  p[0] = R(n);
  for (int k = 1; k <= m; ++k) {
    R s(0);
    if (k <= n) s = s - f.coeff(n - k) * R(k);
    for (int i = 1; i < k && i <= n; ++i) s = s - f.coeff(n - i) * p[static_cast<std::size_t>(k - i)];
    p[static_cast<std::size_t>(k)] = s;
  }
  return p;
}

}  // namespace skein
