#pragma once

// Exact rational linear algebra: echelon forms, kernels, solves, the
// symmetric definiteness trichotomy, and short-vector enumeration for
// positive definite integral forms.

#include <ade/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<RatVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RatVector> r;
    for (const auto& row : rows) {
      RatVector v;
      for (long x : row) v.emplace_back(x);
      r.push_back(std::move(v));
    }
    return from_rows(r);
  }

  static RatMatrix from_columns(const std::vector<RatVector>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  RatVector column(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix product: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("RatMatrix*vector: shape mismatch");
    RatVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) r[i] += a(i, j) * v[j];
    return r;
  }

  friend RatMatrix operator*(const Rational& s, RatMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive definite";
    case Definiteness::PositiveSemidefiniteSingular: return "positive semidefinite (singular)";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

namespace detail {

struct Echelon {
  RatMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination over the rationals, optionally stopping pivot
// search at `pivot_cols` (used for augmented systems).
inline Echelon rref(RatMatrix m, std::size_t pivot_cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace detail

inline std::size_t rank(const RatMatrix& m) { return detail::rref(m, m.cols()).pivots.size(); }

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto e = detail::rref(std::move(aug), m.cols());
  for (std::size_t i = e.pivots.size(); i < m.rows(); ++i)
    if (sgn(e.reduced(i, m.cols())) != 0) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

/// Basis of the right null space, one vector per free column.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto e = detail::rref(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = detail::rref(std::move(aug), n);
  if (e.pivots.size() != n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace detail {

// Fraction-free variant for integer matrices: after using pivot set P each
// residual entry is det M[P+i, P+j], and dividing by the previous pivot is
// exact (Sylvester). Signs of these minors match the rational pivots.
inline Definiteness definiteness_integral(const RatMatrix& input) {
  const std::size_t n = input.rows();
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = input(i, j).get_num();
  Integer prev = 1, t;
  bool singular = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& p = a[k * n + k];
    const int s = sgn(p);
    if (s < 0) return Definiteness::Indefinite;
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(a[k * n + j]) != 0) return Definiteness::Indefinite;
      singular = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Integer& x = a[i * n + j];
        x *= p;
        t = a[k * n + i] * a[k * n + j];
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    prev = p;
  }
  return singular ? Definiteness::PositiveSemidefiniteSingular : Definiteness::PositiveDefinite;
}

}  // namespace detail

/// Symmetric elimination without pivoting. A zero pivot is deferred only if
/// its whole residual row vanishes; otherwise the form is indefinite (a
/// 2x2 principal minor [[0,b],[b,c]] with b != 0 has negative determinant).
inline Definiteness definiteness(const RatMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("definiteness: matrix is not symmetric");
  bool integral = true;
  for (std::size_t i = 0; i < input.rows() && integral; ++i)
    for (std::size_t j = i; j < input.cols() && integral; ++j) integral = is_integer(input(i, j));
  if (integral) return detail::definiteness_integral(input);
  RatMatrix a = input;  // only the upper triangle is read and updated
  const std::size_t n = a.rows();
  bool singular = false;
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(a(k, k));
    if (s < 0) return Definiteness::Indefinite;
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(a(k, j)) != 0) return Definiteness::Indefinite;
      singular = true;
      continue;
    }
    const Rational inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(k, i)) == 0) continue;
      const Rational f = a(k, i) * inv;
      for (std::size_t j = i; j < n; ++j)
        if (sgn(a(k, j)) != 0) a(i, j) -= f * a(k, j);
    }
  }
  return singular ? Definiteness::PositiveSemidefiniteSingular : Definiteness::PositiveDefinite;
}

namespace detail {

// Smallest rational >= sqrt(r) of the form (isqrt(p*q)+1)/q, for r = p/q >= 0.
inline Rational sqrt_upper_bound(const Rational& r) {
  Integer pq = r.get_num() * r.get_den();
  Integer s;
  mpz_sqrt(s.get_mpz_t(), pq.get_mpz_t());
  if (s * s != pq) s += 1;
  Rational out(s, r.get_den());
  out.canonicalize();
  return out;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace detail

/// All integer x with x^T G x == target, for positive definite G.
/// Enumeration follows the LDL^T decomposition G = L D L^T, so that
/// x^T G x = sum_i d_i (x_i + sum_{j>i} L_ji x_j)^2; each coordinate range is
/// over-approximated with exact square-root bounds and the final value is
/// re-checked against the form. Output is sorted lexicographically.
inline std::vector<IntVector> short_vectors(const RatMatrix& gram, const Rational& target) {
  if (definiteness(gram) != Definiteness::PositiveDefinite)
    throw std::invalid_argument("short_vectors: Gram matrix is not positive definite");
  const std::size_t n = gram.rows();
  std::vector<IntVector> out;
  if (sgn(target) < 0) return out;

  // LDL^T with unit lower L.
  RatMatrix l = RatMatrix::identity(n);
  RatVector d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[k];
    d[j] = s;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational t = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[k];
      l(i, j) = t / d[j];
    }
  }

  IntVector x(n);
  RatVector xr(n);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    // level counts remaining coordinates; coordinate index is level-1.
    if (level == 0) {
      if (sgn(budget) != 0) return;
      if (dot(xr, gram * xr) == target) out.push_back(x);
      return;
    }
    const std::size_t i = level - 1;
    Rational centre = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(xr[j]) != 0) centre += l(j, i) * xr[j];
    const Rational radius = detail::sqrt_upper_bound(budget / d[i]);
    const Integer lo = detail::ceil_of(-centre - radius);
    const Integer hi = detail::floor_of(-centre + radius);
    for (Integer v = lo; v <= hi; ++v) {
      const Rational y = Rational(v) + centre;
      const Rational used = d[i] * y * y;
      if (used > budget) continue;
      x[i] = v;
      xr[i] = v;
      descend(level - 1, budget - used);
    }
    x[i] = 0;
    xr[i] = 0;
  };
  descend(n, target);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ade
