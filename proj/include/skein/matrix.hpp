#pragma once

#include "poly.hpp"

namespace skein {

template <CommutativeRing R>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      for (auto& x : row) a_.push_back(x);
    }
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] = z.a_[k] + y.a_[k];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] = z.a_[k] - y.a_[k];
    return z;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const R& v = x(i, k);
        if (poly_detail::zero(v)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) {
          if (poly_detail::zero(y(k, j))) continue;
          z(i, j) = z(i, j) + v * y(k, j);
        }
      }
    return z;
  }
  Matrix scaled(const R& s) const {
    Matrix z = *this;
    for (auto& v : z.a_) v = v * s;
    return z;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<R>()))>;
    Matrix<S> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }
  Matrix pow(unsigned n) const {
    if (!square()) throw std::invalid_argument("power of non-square matrix");
    Matrix r = identity(r_), b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
  R trace() const {
    if (!square()) throw std::invalid_argument("trace of non-square matrix");
    R t(0);
    for (std::size_t i = 0; i < r_; ++i) t = t + (*this)(i, i);
    return t;
  }
  bool is_zero() const {
    for (auto& v : a_)
      if (!poly_detail::zero(v)) return false;
    return true;
  }
  Matrix column(std::size_t j) const {
    Matrix m(r_, 1);
    for (std::size_t i = 0; i < r_; ++i) m(i, 0) = (*this)(i, j);
    return m;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + to_text((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

private:
  void require_same_shape(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

template <CommutativeRing R>
bool is_zero(const Matrix<R>& m) {
  return m.is_zero();
}

template <CommutativeRing R>
Matrix<R> kronecker(const Matrix<R>& x, const Matrix<R>& y) {
  Matrix<R> z(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l) z(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
  return z;
}

// Characteristic polynomial det(xI - M) by Berkowitz's division-free algorithm.
template <CommutativeRing R>
RingPoly<R> charpoly(const Matrix<R>& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  std::size_t n = m.rows();
  // Coefficients stored highest degree first while iterating.
  std::vector<R> c{R(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading principal submatrix of size k+1; split as [[A, R],[S, a]] with a = m(k,k).
    // Toeplitz column: 1, -a, -S R, -S A R, ..., -S A^(k-1) R
    std::vector<R> t(k + 2, R(0));
    t[0] = R(1);
    t[1] = -m(k, k);
    std::vector<R> v(k, R(0));
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t j = 2; j < k + 2; ++j) {
      R s(0);
      for (std::size_t i = 0; i < k; ++i) s = s + m(k, i) * v[i];
      t[j] = -s;
      std::vector<R> w(k, R(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) w[i] = w[i] + m(i, l) * v[l];
      v = std::move(w);
    }
    std::vector<R> nc(k + 2, R(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) nc[i] = nc[i] + t[i - j] * c[j];
    c = std::move(nc);
  }
  std::vector<R> out(c.rbegin(), c.rend());
  return RingPoly<R>(std::move(out));
}

template <CommutativeRing R>
R det_berkowitz(const Matrix<R>& m) {
  if (m.rows() == 0) return R(1);
  R c0 = charpoly(m).coeff(0);
  return (m.rows() % 2) ? -c0 : c0;
}

// Fraction-free Gaussian elimination (Bareiss) for rings with exact division.
template <CommutativeRing R>
R det(Matrix<R> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return R(1);
  R prev(1);
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return R(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return neg ? -d : d;
}

// Reduced row echelon form over a field; returns pivot columns.
template <Field F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    F inv = inverse(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

template <Field F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Solve X * B = C for X (row-vector convention); B must be square and invertible.
template <Field F>
Matrix<F> solve_right(const Matrix<F>& b, const Matrix<F>& c) {
  return c * inverse(b);
}

}  // namespace skein
