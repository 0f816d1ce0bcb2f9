#pragma once

#include "laurent.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <regex>

namespace skein {

// Integer polynomial helpers for cyclotomic data.
namespace cyclo_detail {

inline std::vector<Rational> cyclotomic(int n) {
  static std::mutex m;
  static std::map<int, std::vector<Rational>> cache;
  {
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Rational> num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = Rational(-1);
  num[static_cast<std::size_t>(n)] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = LaurentPoly::poly_divmod(num, cyclotomic(d));
    num = q;
  }
  std::lock_guard<std::mutex> lk(m);
  cache[n] = num;
  return num;
}

}  // namespace cyclo_detail

// Ring k_p: Q[A, kappa] with A a primitive 2p-th root of unity and kappa^6 = u(p).
// Elements carry a kappa-grade in 0..5; level 0 marks a rational constant usable at every level.
class CycloElem {
public:
  CycloElem() = default;
  CycloElem(int c) : CycloElem(Rational(c)) {}
  CycloElem(const Rational& c) : p_(0), coeffs_{c} { trim(); }
  CycloElem(int p, const LaurentPoly& a, int grade = 0) : p_(p), grade_(grade) {
    check_level(p);
    if (grade < 0 || grade > 5) throw std::invalid_argument("kappa grade must be in 0..5");
    coeffs_ = reduce(p, a);
    trim();
  }

  static CycloElem A(int p, int e = 1) { return CycloElem(p, LaurentPoly::monomial(e)); }
  static CycloElem kappa(int p, int g = 1) {
    g %= 6;
    if (g < 0) g += 6;
    return CycloElem(p, LaurentPoly(1), g);
  }

  int level() const { return p_; }
  int grade() const { return grade_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Degree of the cyclotomic field over Q.
  static int field_degree(int p) {
    check_level(p);
    return static_cast<int>(cyclo_detail::cyclotomic(2 * p).size()) - 1;
  }
  // kappa^6 expressed as A^e: exponent e for level p.
  static int u_exponent(int p) {
    if (p == 1) return 0;
    if (p == 2) return 1;
    return -6 - p * (p + 1) / 2;
  }

  LaurentPoly to_laurent() const { return LaurentPoly(0, coeffs_); }
  // Same element at a definite level (promotes level-0 constants).
  CycloElem at_level(int p) const {
    if (p_ == p) return *this;
    if (p_ != 0) throw std::invalid_argument("cannot move element between levels");
    CycloElem r(p, to_laurent(), 0);
    return r;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int p = common_level(a, b);
    if (a.grade_ != b.grade_) throw std::domain_error("adding elements of different kappa-grade");
    CycloElem r = a.at_level(p);
    const CycloElem bb = b.at_level(p);
    if (r.coeffs_.size() < bb.coeffs_.size()) r.coeffs_.resize(bb.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < bb.coeffs_.size(); ++i) r.coeffs_[i] += bb.coeffs_[i];
    r.trim();
    return r;
  }
  CycloElem operator-() const {
    CycloElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (a.is_zero() || b.is_zero()) {
      CycloElem z;
      z.p_ = (a.p_ ? a.p_ : b.p_);
      return z;
    }
    int p = common_level(a, b);
    if (p == 0) return CycloElem(a.coeffs_[0] * b.coeffs_[0]);
    const CycloElem x = a.at_level(p), y = b.at_level(p);
    std::vector<mpq_class> acc(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) acc[i + j] += x.coeffs_[i].raw() * y.coeffs_[j].raw();
    }
    std::vector<Rational> prod;
    prod.reserve(acc.size());
    for (auto& v : acc) prod.emplace_back(v);
    CycloElem r;
    r.p_ = p;
    r.coeffs_ = reduce_dense(p, std::move(prod));
    r.grade_ = x.grade_ + y.grade_;
    if (r.grade_ >= 6) {
      r.grade_ -= 6;
      int e = u_exponent(p);
      if (e != 0) r = r.times_A(e);
    }
    r.trim();
    return r;
  }
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  CycloElem times_A(int e) const {
    if (p_ == 0) throw std::domain_error("level-free constant has no A");
    CycloElem r;
    r.p_ = p_;
    r.grade_ = grade_;
    r.coeffs_ = reduce(p_, to_laurent().shifted(e));
    r.trim();
    return r;
  }

  CycloElem pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    CycloElem r(1), b = *this;
    if (p_) r = r.at_level(p_);
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  // Multiplicative inverse; kappa^-g is rewritten as u^-1 kappa^(6-g).
  CycloElem inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in k_p");
    if (p_ == 0) return CycloElem(coeffs_[0].inverse());
    auto phi = cyclo_detail::cyclotomic(2 * p_);
    // Extended Euclid: find s with s*a = 1 mod phi.
    std::vector<Rational> r0 = phi, r1 = coeffs_;
    std::vector<Rational> s0, s1{Rational(1)};
    LaurentPoly::strip_high(r1);
    while (!(r1.size() == 1)) {
      if (r1.empty()) throw std::domain_error("element not invertible modulo cyclotomic polynomial");
      auto [q, r] = LaurentPoly::poly_divmod(r0, r1);
      LaurentPoly s2 = LaurentPoly(0, s0) - LaurentPoly(0, q) * LaurentPoly(0, s1);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = dense(s2);
    }
    CycloElem out(p_, LaurentPoly(0, s1).scaled(r1[0].inverse()), 0);
    if (grade_ != 0) {
      out = out * CycloElem(p_, LaurentPoly::monomial(-u_exponent(p_)), 6 - grade_);
    }
    return out;
  }

  // Complex conjugation: A -> A^-1, kappa -> kappa^-1.
  CycloElem bar() const {
    if (p_ == 0) return *this;
    CycloElem r(p_, to_laurent().bar(), 0);
    if (grade_ != 0) r = r * CycloElem(p_, LaurentPoly::monomial(-u_exponent(p_)), 6 - grade_);
    return r;
  }

  // Galois action A -> A^k on grade-0 elements.
  CycloElem galois(int k) const {
    if (p_ == 0) return *this;
    if (grade_ != 0) throw std::domain_error("Galois action defined on grade 0 only");
    if (std::gcd(k, 2 * p_) != 1) throw std::invalid_argument("Galois exponent must be a unit");
    return CycloElem(p_, to_laurent().substitute_power(k), 0);
  }

  // Complex embedding A = exp(i*pi*root/p), kappa = exp(i*pi*root*e_u/(6p)).
  std::complex<double> embed(int root = 1) const {
    if (p_ == 0) return coeffs_.empty() ? 0.0 : coeffs_[0].to_double();
    if (std::gcd(root, 2 * p_) != 1) throw std::invalid_argument("root index must be coprime to 2p");
    using std::numbers::pi;
    std::complex<long double> a = std::polar(1.0L, static_cast<long double>(pi) * root / p_);
    std::complex<long double> v = to_laurent().eval(a);
    if (grade_) {
      long double th = static_cast<long double>(pi) * root * u_exponent(p_) / (6.0L * p_);
      // At p = 3 kappa^6 = 1 and kappa^3 = -1 (so eta_3 = -1); shift kappa by a sixth root of unity.
      if (p_ == 3) th += static_cast<long double>(pi) / 3.0L;
      v *= std::polar(1.0L, th * grade_);
    }
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.p_ != b.p_ && a.p_ != 0 && b.p_ != 0) return false;
    if (a.grade_ != b.grade_) return false;
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    if (p_ == 0) return to_laurent().str();
    return "(" + to_laurent().str() + ") * kappa^" + std::to_string(grade_) + " @ p=" + std::to_string(p_);
  }
  friend std::ostream& operator<<(std::ostream& os, const CycloElem& c) { return os << c.str(); }

  static CycloElem parse(const std::string& text) {
    static const std::regex re(R"(^\s*\((.*)\)\s*\*\s*kappa\^(\d+)\s*@\s*p\s*=\s*(\d+)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, re)) {
      int g = std::stoi(m[2]);
      int p = std::stoi(m[3]);
      if (g > 5) throw std::invalid_argument("kappa grade out of range: " + text);
      return CycloElem(p, LaurentPoly::parse(m[1]), g);
    }
    LaurentPoly c = LaurentPoly::parse(text);
    if (!c.is_constant()) throw std::invalid_argument("level missing in k_p element: " + text);
    return CycloElem(c.coeff(0));
  }

  // Reduce a Laurent polynomial modulo A^(2p) = 1 and the cyclotomic polynomial.
  static std::vector<Rational> reduce(int p, const LaurentPoly& a) {
    check_level(p);
    int n = 2 * p;
    std::vector<Rational> dense_v(static_cast<std::size_t>(n), Rational(0));
    for (auto& [e, c] : a.terms()) {
      int k = ((e % n) + n) % n;
      dense_v[static_cast<std::size_t>(k)] += c;
    }
    return reduce_dense(p, std::move(dense_v));
  }

private:
  static void check_level(int p) {
    if (p < 1) throw std::invalid_argument("level p must be positive");
  }
  static int common_level(const CycloElem& a, const CycloElem& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::domain_error("mixing elements of different levels");
    return a.p_ ? a.p_ : b.p_;
  }
  static std::vector<Rational> dense(const LaurentPoly& p) {
    std::vector<Rational> v(static_cast<std::size_t>(p.max_degree() + 1), Rational(0));
    for (auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = c;
    return v;
  }
  static std::vector<Rational> reduce_dense(int p, std::vector<Rational> v) {
    auto phi = cyclo_detail::cyclotomic(2 * p);
    std::size_t d = phi.size() - 1;
    for (std::size_t k = v.size(); k-- > d;) {
      if (v[k].is_zero()) continue;
      Rational f = v[k];
      for (std::size_t j = 0; j <= d; ++j) v[k - d + j] -= f * phi[j];
    }
    if (v.size() > d) v.resize(d);
    LaurentPoly::strip_high(v);
    return v;
  }
  void trim() {
    LaurentPoly::strip_high(coeffs_);
    if (coeffs_.empty()) grade_ = 0;
  }

  int p_ = 0;
  int grade_ = 0;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloElem& c) { return c.is_zero(); }
inline CycloElem inverse(const CycloElem& c) { return c.inverse(); }
inline CycloElem exact_div(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
inline CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
inline CycloElem bar(const CycloElem& c) { return c.bar(); }

// Ring map from level p into level q sending A_p to A_q^e; grade-0 elements only.
inline CycloElem transfer_power(const CycloElem& x, int q, int e) {
  if (x.level() == 0) return x;
  if (x.grade() != 0) throw std::domain_error("transfer of graded element");
  return CycloElem(q, x.to_laurent().substitute_power(e), 0);
}

// Exponent e with A_2 -> A_{2p}^e for odd p.
inline int transfer_i_exponent(int p) { return p * p; }
// Exponent e with A_p -> A_{2p}^e for odd p; the sign of p+1 is adjusted so the image is primitive.
inline int transfer_j_exponent(int p) { return (p % 4 == 1) ? p + 1 : 3 * p + 1; }

inline CycloElem transfer_i(const CycloElem& x, int p) {
  if (x.level() != 0 && x.level() != 2) throw std::invalid_argument("i_p expects a level-2 element");
  return transfer_power(x, 2 * p, transfer_i_exponent(p));
}
inline CycloElem transfer_j(const CycloElem& x, int p) {
  if (x.level() != 0 && x.level() != p) throw std::invalid_argument("j_p expects a level-p element");
  return transfer_power(x, 2 * p, transfer_j_exponent(p));
}

// Replace kappa^3 by its value where kappa^6 = 1 pins it: kappa^3 = -1 at p = 3.
inline CycloElem resolve_kappa(const CycloElem& x) {
  if (x.level() != 3 || x.grade() % 3 != 0) return x;
  CycloElem r(3, x.to_laurent(), 0);
  return x.grade() == 3 ? -r : r;
}

// Lift a Laurent polynomial into k_p.
inline CycloElem specialize(const LaurentPoly& a, int p) { return CycloElem(p, a, 0); }

}  // namespace skein
