#pragma once

#include "matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>

namespace skein {

// Sylvester-matrix resultant of P and G with G taken at formal degree m.
template <CommutativeRing R>
R sylvester_resultant(const RingPoly<R>& p, const RingPoly<R>& g, int m) {
  int n = p.degree();
  if (n < 0) throw std::invalid_argument("resultant with zero polynomial");
  std::size_t size = static_cast<std::size_t>(n + m);
  if (size == 0) return R(1);
  Matrix<R> s(size, size);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = p.coeff(n - i);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s(static_cast<std::size_t>(m + r), static_cast<std::size_t>(r + j)) = g.coeff(m - j);
  return det_berkowitz(s);
}

// Monic polynomial whose roots are all products alpha*beta, computed as Res_y(P(y), y^deg(Q) Q(x/y)).
template <CommutativeRing R>
RingPoly<R> tensor_product(const RingPoly<R>& p, const RingPoly<R>& q) {
  if (!p.is_monic() || !q.is_monic()) throw std::invalid_argument("tensor product needs monic polynomials");
  using P = RingPoly<R>;
  int m = q.degree();
  std::vector<P> gc(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) gc[static_cast<std::size_t>(m - j)] = P::monomial(j, q.coeff(j));
  RingPoly<P> gy(std::move(gc));
  RingPoly<P> py = p.map([](const R& c) { return P(c); });
  return sylvester_resultant(py, gy, m);
}

// Roots of a polynomial over k_p under the embedding A = exp(i*pi*root/p), with multiplicity,
// ordered by modulus and then argument.
inline std::vector<std::complex<double>> numeric_roots(const RingPoly<CycloElem>& f, int root = 1) {
  std::vector<std::complex<double>> out;
  if (f.degree() <= 0) return out;
  for (auto& [factor, mult] : squarefree_factorization(f)) {
    int d = factor.degree();
    std::vector<std::complex<long double>> c(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
      auto z = factor.coeff(k).embed(root);
      c[static_cast<std::size_t>(k)] = {z.real(), z.imag()};
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i)
      comp(i, d - 1) = -std::complex<double>(static_cast<double>(c[static_cast<std::size_t>(i)].real()),
                                             static_cast<double>(c[static_cast<std::size_t>(i)].imag()));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < d; ++i) {
      std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
      for (int it = 0; it < 50; ++it) {
        std::complex<long double> v = 0, dv = 0;
        for (int k = d; k >= 0; --k) {
          dv = dv * z + v;
          v = v * z + c[static_cast<std::size_t>(k)];
        }
        if (std::abs(dv) == 0.0L) break;
        std::complex<long double> step = v / dv;
        z -= step;
        if (std::abs(step) < 1e-30L) break;
      }
      for (int k = 0; k < mult; ++k)
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-9) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return out;
}

namespace roots_detail {
inline long euler_phi(long m) {
  long r = m;
  for (long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      r -= r / q;
    }
  if (m > 1) r -= r / m;
  return r;
}
}  // namespace roots_detail

// Least m such that every root of f is an m-th root of unity; nullopt if some root is not a root of unity.
inline std::optional<long> root_periodicity(const RingPoly<CycloElem>& f) {
  if (f.degree() <= 0) return 1L;
  RingPoly<CycloElem> sf(CycloElem(1));
  for (auto& [factor, mult] : squarefree_factorization(f)) sf *= factor;
  int level = 0;
  for (auto& c : f.coeffs()) level = std::max(level, c.level());
  long field = level ? CycloElem::field_degree(level) : 1;
  long max_phi = field * sf.degree();
  long bound = 1;
  for (long m = 1; m <= 64 * max_phi + 64; ++m)
    if (roots_detail::euler_phi(m) <= max_phi) bound = m;
  // x^m mod sf, stepping m upward.
  RingPoly<CycloElem> xm(CycloElem(1));
  RingPoly<CycloElem> one(CycloElem(1));
  for (long m = 1; m <= bound; ++m) {
    xm = divmod(xm * RingPoly<CycloElem>::x(), sf).second;
    if (xm == one) return m;
  }
  return std::nullopt;
}

}  // namespace skein
