#pragma once

#include <memory>
#include <vector>

#include "qfw/matrix.hpp"

namespace qfw {

/// Finite-dimensional associative unital algebra over F_p given by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k. Values are immutable and cheap to copy.
class Algebra {
 public:
  /// Structure constants flattened as c[(i*n + j)*n + k]. Throws
  /// AssociativityViolation / UnitViolation when the data is not an algebra.
  static Algebra make(PrimeField field, std::size_t dim, std::vector<Scalar> structconsts, Vec unit);

  PrimeField field() const;
  Scalar p() const;
  std::size_t dim() const;
  const Vec& unit() const;
  Scalar c(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Scalar>& structconsts() const;

  /// e_i e_j as a coordinate vector.
  const Vec& basis_product(std::size_t i, std::size_t j) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec zero() const { return Vec(dim(), 0); }

  /// Matrix of y -> e_i y.
  const Mat& left_mult_basis(std::size_t i) const;
  /// Matrix of y -> y e_i.
  const Mat& right_mult_basis(std::size_t i) const;
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;

  bool is_commutative() const;
  /// Basis indices generating the algebra (greedy, deterministic).
  const std::vector<std::size_t>& generators() const;

  bool operator==(const Algebra& o) const;

 private:
  struct Impl;
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Algebra build(PrimeField field, std::size_t dim, std::vector<Scalar> c, Vec unit, bool validate);
  std::shared_ptr<const Impl> impl_;
};

/// Validators, exposed for tests and for re-checking derived algebras.
void validate_associative(const Algebra& a);
void validate_unit(const Algebra& a);

Algebra field_algebra(PrimeField field);
Algebra opposite(const Algebra& a);
/// Basis e_i (x) f_j at index i*dim(B) + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Algebra direct_product(const Algebra& a, const Algebra& b);
/// mult_table[g][h] = index of gh.
Algebra group_algebra(PrimeField field, const std::vector<std::vector<std::size_t>>& mult_table);
void validate_group(const std::vector<std::vector<std::size_t>>& mult_table);
/// F_p[x]/(x^n), basis 1, x, ..., x^(n-1).
Algebra truncated_polynomial(PrimeField field, std::size_t n);
/// M_n(F_p), basis e_ij at index i*n + j.
Algebra matrix_algebra(PrimeField field, std::size_t n);
/// Upper-triangular n x n matrices, basis e_ij (i <= j) in row-major order.
Algebra upper_triangular(PrimeField field, std::size_t n);
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
std::vector<std::vector<std::size_t>> symmetric_group_s3_table();

/// R (x) S^op together with r -> r (x) 1 and s -> 1 (x) s.
struct Enveloping {
  Algebra algebra;
  Mat left_embedding;   // dim(env) x dim(R)
  Mat right_embedding;  // dim(env) x dim(S)
};
Enveloping enveloping(const Algebra& r, const Algebra& s);

class AlgebraHom {
 public:
  /// matrix is dim(target) x dim(source); column i is the image of e_i.
  static AlgebraHom make(const Algebra& source, const Algebra& target, Mat matrix);
  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }
  Vec operator()(const Vec& x) const { return matrix_ * x; }

 private:
  AlgebraHom(Algebra s, Algebra t, Mat m) : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  Algebra source_, target_;
  Mat matrix_;
};

AlgebraHom identity_hom(const Algebra& a);
AlgebraHom unit_embedding(const Algebra& target);
/// beta o alpha.
AlgebraHom compose(const AlgebraHom& alpha, const AlgebraHom& beta);

}  // namespace qfw
