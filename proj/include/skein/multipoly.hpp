#pragma once

#include "rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

// Sparse multivariate polynomial over Q with named variables.
class MultiPoly {
public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Rational& c) {
    if (!c.is_zero()) t_[{}] = c;
  }
  static MultiPoly var(std::size_t index, int power = 1) {
    Exponents e(index + 1, 0);
    e[index] = power;
    MultiPoly m;
    m.t_[e] = Rational(1);
    return m;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return t_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.t_) r.add(e, c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

  std::string str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : t_) {
      bool neg = c.sign() < 0;
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      Rational m = c.abs();
      if (mono.empty()) s += m.str();
      else s += (m.is_one() ? "" : m.str() + "*") + mono;
    }
    return s;
  }
  std::string str() const { return str({}); }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& m) { return os << m.str(); }

private:
  void add(Exponents e, const Rational& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto& slot = t_[e];
    slot += c;
    if (slot.is_zero()) t_.erase(e);
  }
  std::map<Exponents, Rational> t_;
};

inline bool is_zero(const MultiPoly& m) { return m.is_zero(); }

}  // namespace skein
