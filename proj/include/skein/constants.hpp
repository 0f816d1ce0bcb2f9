#pragma once

#include "cyclo.hpp"

namespace skein {

// Quantum integer [m] = (A^2m - A^-2m)/(A^2 - A^-2).
inline LaurentPoly qint(int m) {
  if (m == 0) return {};
  if (m < 0) return -qint(-m);
  LaurentPoly r;
  for (int j = 0; j < m; ++j) r += LaurentPoly::monomial(2 * m - 2 - 4 * j);
  return r;
}

inline LaurentPoly qfactorial(int m) {
  if (m < 0) throw std::invalid_argument("negative quantum factorial");
  LaurentPoly r(1);
  for (int j = 2; j <= m; ++j) r *= qint(j);
  return r;
}

// Loop value delta = -A^2 - A^-2.
inline LaurentPoly loop_value() { return -LaurentPoly::monomial(2) - LaurentPoly::monomial(-2); }

// Unknot colored by the s-th Jones-Wenzl idempotent.
inline LaurentPoly unknot_value(int s) {
  LaurentPoly q = qint(s + 1);
  return (s % 2) ? -q : q;
}

// Twist eigenvalue mu(s) = (-1)^s A^(s^2+2s).
inline LaurentPoly twist_value(int s) {
  LaurentPoly m = LaurentPoly::monomial(s * s + 2 * s);
  return (s % 2) ? -m : m;
}

// Full twist on a pair colored i, j fusing to r: mu(r)/(mu(i) mu(j)).
inline LaurentPoly full_twist(int r, int i, int j) {
  int e = (r * r + 2 * r) - (i * i + 2 * i) - (j * j + 2 * j);
  LaurentPoly m = LaurentPoly::monomial(e);
  return ((r + i + j) % 2) ? -m : m;
}

// Number of usable colors n(p) = floor((p-1)/2).
inline int color_bound(int p) { return (p - 1) / 2; }

// Rank parameter d(p).
inline int rank_parameter(int p) {
  if (p == 3 || p == 4) return 1;
  if (p == 6) return 2;
  return p;
}

// Whether level p is ordinary for tangles with 2n boundary points.
inline bool is_ordinary(int p, int n) {
  if (p < 1) throw std::invalid_argument("level must be positive");
  if (p <= 2) return true;
  if (p % 2 == 0) return p > 2 * n + 2;
  return p > n + 1;
}

// Sum over colors s < n(p) of mu(s) <e_s>^2 in k_p.
inline CycloElem surgery_sum(int p) {
  CycloElem s = CycloElem(0).at_level(p);
  for (int c = 0; c < color_bound(p); ++c) {
    LaurentPoly e = unknot_value(c);
    s += CycloElem(p, twist_value(c) * e * e);
  }
  return s;
}

// beta = kappa^-3 eta, a grade-0 unit in k_p.
inline CycloElem beta_constant(int p) {
  if (p == 1) return CycloElem(1).at_level(1);
  if (p == 2) return CycloElem(2, LaurentPoly(1) - LaurentPoly::A()) * CycloElem(Rational(1, 2));
  return surgery_sum(p).inverse();
}

// eta = kappa^3 beta, the invariant of the 3-sphere.
inline CycloElem eta_constant(int p) { return CycloElem::kappa(p, 3) * beta_constant(p); }

inline CycloElem delta_at(int p) { return CycloElem(p, loop_value()); }
inline CycloElem mu_at(int p, int s = 1) { return CycloElem(p, twist_value(s)); }
inline CycloElem unknot_at(int p, int s) { return CycloElem(p, unknot_value(s)); }

}  // namespace skein
