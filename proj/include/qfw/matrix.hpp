#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfw/error.hpp"

namespace qfw {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Arithmetic in the prime field F_p. Only odd primes below 2^16 are accepted so
/// that products of two residues fit comfortably in 64-bit accumulators.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  Scalar p() const { return p_; }
  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((a + b) % p_); }
  Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((a + p_ - b) % p_); }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar reduce(std::int64_t v) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over F_p. The modulus travels with the value so that
/// mixed-field arithmetic is caught at the call site.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Scalar p);
  Mat(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> entries);

  static Mat identity(std::size_t n, Scalar p);
  static Mat column(const Vec& v, Scalar p);
  /// Columns given as vectors of equal length.
  static Mat from_columns(std::span<const Vec> cols, std::size_t rows, Scalar p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Scalar s) const;
  Mat& add_scaled(const Mat& o, Scalar s);

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  bool operator==(const Mat& o) const = default;

  std::string debug_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scalar p_ = 0;
  std::vector<Scalar> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat hstack(std::span<const Mat> blocks);
Mat vstack(std::span<const Mat> blocks);
Mat block_diag(std::span<const Mat> blocks);
/// Column-major flattening: vec(F)[c*rows + r] = F(r, c).
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols, Scalar p);

Vec vec_add(const Vec& a, const Vec& b, Scalar p);
Vec vec_scaled(const Vec& a, Scalar s, Scalar p);
bool vec_is_zero(const Vec& a);
Vec unit_vec(std::size_t n, std::size_t i);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form with the leftmost pivot taken from the smallest
/// available row index.
Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Some X with a * X = b, free variables set to zero; nullopt when inconsistent.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

/// Basis of {v : a v = 0}, one vector per free column of rref(a).
std::vector<Vec> nullspace(const Mat& a);

std::optional<Mat> invert(const Mat& a);

/// Coordinates with respect to a fixed linearly independent family of vectors.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(std::span<const Vec> basis, std::size_t len, Scalar p);

  std::size_t size() const { return size_; }
  /// Coefficients c with sum c_i basis_i = v. v must lie in the span; that is
  /// not re-checked here (use `contains` when in doubt).
  Vec operator()(const Vec& v) const;
  bool contains(const Vec& v) const;

 private:
  std::size_t size_ = 0;
  std::size_t len_ = 0;
  Scalar p_ = 0;
  std::vector<std::size_t> rows_;
  Mat select_inv_;
  Mat basis_;
};

/// A subspace W of F_p^n kept in rref, giving the quotient F_p^n / W with the
/// non-pivot standard vectors as coset representatives.
class Quotient {
 public:
  Quotient() = default;
  /// Subspace spanned by the rows of `gens`.
  Quotient(const Mat& gens, std::size_t n, Scalar p);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return free_.size(); }
  std::size_t sub_dim() const { return basis_.rows(); }
  const std::vector<std::size_t>& representatives() const { return free_; }
  /// Coordinates of v + W in the quotient basis.
  Vec project(const Vec& v) const;
  /// dim() x n matrix of the projection.
  Mat projection() const;
  /// n x dim() matrix sending quotient basis vectors to their representatives.
  Mat section() const;
  /// Rows of rref basis of W.
  const Mat& subspace() const { return basis_; }

 private:
  std::size_t n_ = 0;
  Scalar p_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

}  // namespace qfw
