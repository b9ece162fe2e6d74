#include "toricalc/lattice_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toricalc {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntegerMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const IntVector> rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("IntegerMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntegerMatrix::col(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntegerMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest |entry| in column `col` among rows >= `from`; ties keep the lowest
// row index.
std::optional<std::size_t> column_pivot(const IntegerMatrix& d, std::size_t col,
                                        std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < d.rows(); ++i) {
    if (d(i, col) == 0) continue;
    if (!best || abs(d(i, col)) < abs(d(*best, col))) best = i;
  }
  return best;
}

} // namespace

NormalForm hnf(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < d.cols() && pivot_row < d.rows(); ++col) {
    bool found = false;
    while (auto piv = column_pivot(d, col, pivot_row)) {
      found = true;
      d.swap_rows(pivot_row, *piv);
      u.swap_rows(pivot_row, *piv);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < d.rows(); ++i) {
        if (d(i, col) == 0) continue;
        BigInt q = floor_div(d(i, col), d(pivot_row, col));
        d.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
        if (d(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (d(pivot_row, col) < 0) {
      d.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      BigInt q = floor_div(d(i, col), d(pivot_row, col));
      d.add_row_multiple(i, pivot_row, -q);
      u.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return NormalForm{NormalFormKind::Hermite, std::move(d), std::move(u),
                    std::nullopt};
}

NormalForm snf(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t limit = std::min(d.rows(), d.cols());

  bool exhausted = false;
  for (std::size_t t = 0; t < limit && !exhausted; ++t) {
    for (;;) {
      // Smallest |entry| of the trailing block; leftmost column, then lowest
      // row break ties.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t j = t; j < d.cols(); ++j)
        for (std::size_t i = t; i < d.rows(); ++i) {
          if (d(i, j) == 0) continue;
          if (!piv || abs(d(i, j)) < abs(d(piv->first, piv->second)))
            piv = {i, j};
        }
      if (!piv) {
        exhausted = true;
        break;
      }

      d.swap_rows(t, piv->first);
      u.swap_rows(t, piv->first);
      d.swap_cols(t, piv->second);
      v.swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return NormalForm{NormalFormKind::Smith, std::move(d), std::move(u),
                    std::move(v)};
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
  NormalForm s = snf(m);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    if (s.D(i, i) == 0) break;
    out.push_back(s.D(i, i));
  }
  return out;
}

IntegerMatrix hermite_basis(const IntegerMatrix& m) {
  NormalForm h = hnf(m);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < h.D.rows(); ++i) {
    IntVector r = h.D.row(i);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows, m.cols());
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& m) {
  // U * M^T = H; rows of U facing zero rows of H span the kernel and, being
  // part of a unimodular basis, span it saturated.
  NormalForm h = hnf(m.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < h.D.rows(); ++i)
    if (is_zero(h.D.row(i))) kernel.push_back(h.U.row(i));
  return hermite_basis(IntegerMatrix::from_rows(kernel, m.cols()));
}

namespace {

// Row echelon over Q in place; returns the rank.
std::size_t rational_echelon(std::vector<RatVector>& a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<RatVector> to_rational(std::span<const IntVector> rows,
                                   std::size_t cols) {
  std::vector<RatVector> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    RatVector r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = row[j];
    a.push_back(std::move(r));
  }
  return a;
}

} // namespace

std::size_t rank(std::span<const IntVector> rows, std::size_t cols) {
  auto a = to_rational(rows, cols);
  return rational_echelon(a, cols);
}

std::size_t rank(const IntegerMatrix& m) {
  auto rows = m.row_list();
  return rank(rows, m.cols());
}

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  auto rows = m.row_list();
  auto a = to_rational(rows, n);
  BigRat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

bool rows_saturated(const IntegerMatrix& m) {
  auto factors = invariant_factors(m);
  if (factors.size() != m.rows()) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [](const BigInt& f) { return f == 1; });
}

std::optional<RatVector> solve(const IntegerMatrix& b,
                               std::span<const BigRat> y) {
  const std::size_t n = b.rows();
  if (b.cols() != n || y.size() != n)
    throw std::invalid_argument("solve: shape mismatch");
  std::vector<RatVector> a(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = b(i, j);
    a[i][n] = y[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigRat dot(std::span<const BigInt> a, std::span<const BigRat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt content(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(IntVector v) {
  BigInt g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector primitive(std::span<const BigRat> v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRat s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(std::move(out));
}

bool is_zero(std::span<const BigInt> v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

} // namespace toricalc
