#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace toricalc {

using BigInt = mpz_class;
using BigRat = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// All rows must have length `cols`; `cols` is needed for the 0-row case.
  static IntegerMatrix from_rows(std::span<const IntVector> rows,
                                 std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t i);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

enum class NormalFormKind { Hermite, Smith };

/// Hermite: U * M = D. Smith: U * M * V = D.
struct NormalForm {
  NormalFormKind kind = NormalFormKind::Hermite;
  IntegerMatrix D;
  IntegerMatrix U;
  std::optional<IntegerMatrix> V;
};

/// Row Hermite normal form. Pivots are positive and the entries above each
/// pivot lie in [0, pivot). Zero rows collect at the bottom.
NormalForm hnf(const IntegerMatrix& m);

/// Smith normal form with d_1 | d_2 | ... and d_i >= 0.
NormalForm snf(const IntegerMatrix& m);

/// Diagonal of an SNF result, truncated at the first zero.
std::vector<BigInt> invariant_factors(const IntegerMatrix& m);

/// Saturated basis of {v : M v = 0}, in Hermite form. Returns a 0-row
/// matrix with M.cols() columns when the kernel is trivial.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& m);

/// Nonzero rows of the Hermite form of `m`.
IntegerMatrix hermite_basis(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(std::span<const IntVector> rows, std::size_t cols);
BigInt determinant(const IntegerMatrix& m);

/// True when the rows of `m` generate a saturated sublattice of full rank
/// rows(), i.e. every invariant factor is 1.
bool rows_saturated(const IntegerMatrix& m);

// Vector helpers.
BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);
BigRat dot(std::span<const BigInt> a, std::span<const BigRat> b);
BigInt content(std::span<const BigInt> v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
/// Clears denominators and returns the primitive integer vector on the same
/// ray.
IntVector primitive(std::span<const BigRat> v);
bool is_zero(std::span<const BigInt> v);

/// Solves B x = y for square invertible B over the rationals; nullopt when B
/// is singular.
std::optional<RatVector> solve(const IntegerMatrix& b,
                               std::span<const BigRat> y);

IntVector to_int_vector(std::initializer_list<long> values);

} // namespace toricalc
