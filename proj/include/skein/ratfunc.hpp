#pragma once

#include "laurent.hpp"

namespace skein {

// Element of Q(A), kept reduced with a monic denominator that has nonzero constant term.
class RatFunc {
public:
  RatFunc() = default;
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
  RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { normalize(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  LaurentPoly to_laurent() const {
    if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial");
    return num_;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(A)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const { return RatFunc(1) / *this; }
  RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(A)");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!(g == LaurentPoly(1))) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    int shift = den_.min_degree();
    Rational lead = den_.leading();
    den_ = den_.shifted(-shift).scaled(lead.inverse());
    num_ = num_.shifted(-shift).scaled(lead.inverse());
  }

  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc inverse(const RatFunc& r) { return r.inverse(); }
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
inline RatFunc bar(const RatFunc& r) { return r.bar(); }

}  // namespace skein
