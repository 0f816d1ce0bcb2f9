#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Laurent polynomial in A with rational coefficients.
// Canonical form: coefficient vector trimmed at both ends, zero is the empty vector.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(int e, const Rational& c = Rational(1)) {
    return LaurentPoly(e, std::vector<Rational>{c});
  }
  static LaurentPoly A(int e = 1) { return monomial(e); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  int min_degree() const { return c_.empty() ? 0 : low_; }
  int max_degree() const { return c_.empty() ? 0 : low_ + static_cast<int>(c_.size()) - 1; }
  int span() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); }));
  }

  Rational coeff(int e) const {
    if (c_.empty() || e < low_ || e > max_degree()) return Rational(0);
    return c_[static_cast<std::size_t>(e - low_)];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational trailing() const { return c_.empty() ? Rational(0) : c_.front(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  // (exponent, coefficient) pairs, nonzero only, increasing exponent.
  std::vector<std::pair<int, Rational>> terms() const {
    std::vector<std::pair<int, Rational>> t;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) t.emplace_back(low_ + static_cast<int>(i), c_[i]);
    return t;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, Rational(1)); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, Rational(-1)); }

  LaurentPoly& add_scaled(const LaurentPoly& o, const Rational& s, int shift = 0) {
    if (o.c_.empty() || s.is_zero()) return *this;
    int olow = o.low_ + shift;
    if (c_.empty()) {
      low_ = olow;
      c_.assign(o.c_.size(), Rational(0));
    } else {
      int lo = std::min(low_, olow);
      int hi = std::max(max_degree(), olow + static_cast<int>(o.c_.size()) - 1);
      if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
      low_ = lo;
      c_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (o.c_[i].is_zero()) continue;
      auto& slot = c_[static_cast<std::size_t>(olow - low_) + i];
      if (s.is_one()) slot += o.c_[i];
      else slot += s * o.c_[i];
    }
    trim();
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    if (b.c_.size() == 1) return a.scaled(b.c_[0]).shifted(b.low_);
    if (a.c_.size() == 1) return b.scaled(a.c_[0]).shifted(a.low_);
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
      }
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& x : acc) out.emplace_back(x);
    return LaurentPoly(a.low_ + b.low_, std::move(out));
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    LaurentPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.c_.empty()) r.low_ += k;
    return r;
  }

  // A -> A^-1
  LaurentPoly bar() const {
    if (c_.empty()) return {};
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return LaurentPoly(-max_degree(), std::move(r));
  }
  // A -> A^k (k may be negative)
  LaurentPoly substitute_power(int k) const {
    if (k == 0) {
      Rational s(0);
      for (auto& x : c_) s += x;
      return LaurentPoly(s);
    }
    LaurentPoly r;
    for (auto& [e, c] : terms()) r.add_scaled(monomial(e * k), c);
    return r;
  }

  LaurentPoly pow(int n) const {
    if (n < 0) {
      if (!is_monomial()) throw std::domain_error("negative power of non-monomial Laurent polynomial");
      return monomial(-low_, Rational(1) / c_[0]).pow(-n);
    }
    LaurentPoly r(1), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> s = 0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * z + c_[i].to_double();
    return s * std::pow(z, low_);
  }
  std::complex<long double> eval(std::complex<long double> z) const {
    std::complex<long double> s = 0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * z + static_cast<long double>(c_[i].to_double());
    return s * std::pow(z, low_);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  // Polynomial division in Q[A] after clearing monomial factors.
  // Returns the quotient when b divides a in the Laurent ring, nullopt otherwise.
  friend std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly{};
    auto [q, r] = poly_divmod(a.c_, b.c_);
    if (!all_zero(r)) return std::nullopt;
    return LaurentPoly(a.low_ - b.low_, std::move(q));
  }
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::domain_error("inexact Laurent division");
    return *q;
  }

  // Monic gcd in Q[A] of the monomial-free parts, returned with lowest exponent 0.
  friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    std::vector<Rational> x = a.c_, y = b.c_;
    while (!y.empty()) {
      auto [q, r] = poly_divmod(x, y);
      x = std::move(y);
      y = std::move(r);
      strip_high(y);
    }
    Rational lead = x.back();
    for (auto& v : x) v /= lead;
    return LaurentPoly(0, std::move(x));
  }

  std::string str(char var = 'A') const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms()) {
      bool neg = c.sign() < 0;
      Rational m = c.abs();
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += m.str();
      } else {
        if (!m.is_one()) out += m.str() + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

  // Accepts sums of terms of the form [c*]A[^e] or c, with c an integer or fraction.
  static LaurentPoly parse(const std::string& text, char var = 'A') {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentPoly out;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("bad Laurent polynomial: " + text); };
    auto read_int = [&](std::string& buf) {
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) buf += s[i++];
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) buf += s[i++];
      if (i == st) fail();
    };
    bool first = true;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail();
      }
      first = false;
      Rational c(1);
      bool have_coeff = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::string buf;
        read_int(buf);
        if (i < s.size() && s[i] == '/') {
          ++i;
          buf += '/';
          std::size_t st = i;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) buf += s[i++];
          if (i == st) fail();
        }
        c = Rational::parse(buf);
        have_coeff = true;
        if (i < s.size() && s[i] == '*') {
          ++i;
          if (i >= s.size() || s[i] != var) fail();
        }
      }
      int e = 0;
      if (i < s.size() && s[i] == var) {
        ++i;
        e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::string buf;
          read_int(buf);
          e = std::stoi(buf);
        }
      } else if (!have_coeff) {
        fail();
      }
      out.add_scaled(monomial(e), sign < 0 ? -c : c);
    }
    return out;
  }

  // Helpers on dense coefficient vectors (index = degree).
  static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                             const std::vector<Rational>& b) {
    std::vector<Rational> bb = b;
    strip_high(bb);
    strip_high(a);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < bb.size()) return {{}, a};
    std::vector<Rational> q(a.size() - bb.size() + 1, Rational(0));
    Rational lead_inv = bb.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = a[k + bb.size() - 1] * lead_inv;
      q[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < bb.size(); ++j) a[k + j] -= f * bb[j];
    }
    a.resize(bb.size() - 1);
    strip_high(a);
    return {q, a};
  }
  static void strip_high(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  }
  static bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
  }

private:
  void trim() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b].is_zero()) ++b;
    if (b == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (b) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
      low_ += static_cast<int>(b);
    }
    while (c_.back().is_zero()) c_.pop_back();
  }

  int low_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

}  // namespace skein
