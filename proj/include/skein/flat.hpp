#pragma once

#include "matrix.hpp"

#include <optional>

namespace skein {

// Restriction of an endomorphism to its eventual image (the invertible part of Fitting's decomposition).
template <Field F>
struct FlatPart {
  std::size_t rank = 0;
  Matrix<F> flat;    // rank x rank, acts on rows in the chosen basis
  Matrix<F> basis;   // rank x n, rows span the eventual image
  RingPoly<F> gamma; // characteristic polynomial of the flat part
};

// Row-vector convention: the endomorphism is v -> v * Z.
template <Field F>
FlatPart<F> flat_decompose(const Matrix<F>& z) {
  if (!z.square()) throw std::invalid_argument("flat decomposition of non-square matrix");
  std::size_t n = z.rows();
  FlatPart<F> out;
  Matrix<F> zn = z.pow(static_cast<unsigned>(n));
  Matrix<F> rr = zn;
  auto piv = row_reduce(rr);
  out.rank = piv.size();
  if (out.rank == 0) {
    out.flat = Matrix<F>(0, 0);
    out.basis = Matrix<F>(0, n);
    out.gamma = RingPoly<F>(F(1));
    return out;
  }
  Matrix<F> basis(out.rank, n);
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = rr(i, j);
  // basis * Z = C * basis; read C off the pivot columns where basis is the identity.
  Matrix<F> bz = basis * z;
  Matrix<F> c(out.rank, out.rank);
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t k = 0; k < out.rank; ++k) c(i, k) = bz(i, piv[k]);
  if (!(c * basis == bz)) throw std::logic_error("eventual image is not invariant");
  out.flat = c;
  out.basis = basis;
  out.gamma = charpoly(c);
  return out;
}

// Characteristic polynomial with the largest power of x removed.
template <CommutativeRing R>
RingPoly<R> normalized_charpoly(const Matrix<R>& z) {
  RingPoly<R> c = charpoly(z);
  int k = 0;
  while (k <= c.degree() && is_zero(c.coeff(k))) ++k;
  std::vector<R> v;
  for (int i = k; i <= c.degree(); ++i) v.push_back(c.coeff(i));
  return RingPoly<R>(std::move(v));
}

// Invariant factors of a square matrix (Smith form of xI - M over F[x]), nontrivial ones only.
template <Field F>
std::vector<RingPoly<F>> similarity_invariants(const Matrix<F>& m) {
  using P = RingPoly<F>;
  std::size_t n = m.rows();
  Matrix<P> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? P::x() : P()) - P(m(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Move a nonzero entry of least degree to (k,k).
      int best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
            best = a(i, j).degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(bi, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, bj));
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        P q = divmod(a(i, k), a(k, k)).first;
        for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - q * a(k, j);
        if (!a(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j).is_zero()) continue;
        P q = divmod(a(k, j), a(k, k)).first;
        for (std::size_t i = k; i < n; ++i) a(i, j) = a(i, j) - q * a(i, k);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divmod(a(i, j), a(k, k)).second.is_zero()) {
            for (std::size_t jj = k; jj < n; ++jj) a(k, jj) = a(k, jj) + a(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<P> out;
  for (std::size_t k = 0; k < n; ++k) {
    P d = make_monic(a(k, k));
    if (d.degree() > 0) out.push_back(d);
  }
  return out;
}

template <CommutativeRing R>
R trace_power(const Matrix<R>& z, unsigned d) {
  return z.pow(d).trace();
}

template <Field F>
struct MatrixPeriod {
  unsigned period;
  F scalar;
};

// Least m <= bound with M^m a scalar matrix, or the identity when identity_only is set.
template <Field F>
std::optional<MatrixPeriod<F>> matrix_period(const Matrix<F>& m, unsigned bound, bool identity_only = false) {
  if (m.rows() == 0) return MatrixPeriod<F>{1, F(1)};
  Matrix<F> pw = m;
  for (unsigned k = 1; k <= bound; ++k) {
    F s = identity_only ? F(1) : pw(0, 0);
    bool scalar = true;
    for (std::size_t i = 0; i < pw.rows() && scalar; ++i)
      for (std::size_t j = 0; j < pw.cols(); ++j)
        if (!(pw(i, j) == (i == j ? s : F(0)))) {
          scalar = false;
          break;
        }
    if (scalar) return MatrixPeriod<F>{k, s};
    pw = pw * m;
  }
  return std::nullopt;
}

}  // namespace skein
