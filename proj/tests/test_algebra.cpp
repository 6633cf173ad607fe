#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfw/algebra.hpp"

using namespace qfw;

namespace {
const PrimeField F5(5), F7(7);

// Matrix-unit product oracle: e_ij e_kl = delta_jk e_il.
bool matrix_units_ok(const Algebra& a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vec expect(n * n, 0);
          if (j == k) expect[i * n + l] = 1;
          if (a.basis_product(i * n + j, k * n + l) != expect) return false;
        }
  return true;
}
}  // namespace

TEST_CASE("make_algebra") {
  auto k = Algebra::make(F5, 1, {1}, {1});
  CHECK(k.dim() == 1);
  auto m2 = matrix_algebra(F5, 2);
  CHECK(matrix_units_ok(m2, 2));
  auto again = Algebra::make(F5, 4, m2.structconsts(), m2.unit());
  CHECK(again == m2);
  try {
    Algebra::make(F5, 1, {1}, {0});
    FAIL("expected UnitViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitViolation);
  }
  // e0 e0 = e1, e1 anything = 0 except unit... not associative: e0 e0 = e1, e0 e1 = e0, e1 e0 = 0
  std::vector<Scalar> c(8, 0);
  c[(0 * 2 + 0) * 2 + 1] = 1;
  c[(0 * 2 + 1) * 2 + 0] = 1;
  CHECK_THROWS_AS(Algebra::make(F5, 2, c, {1, 0}), Error);
}

TEST_CASE("opposite") {
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  CHECK(opposite(c2) == c2);
  auto m2 = matrix_algebra(F5, 2);
  CHECK(opposite(opposite(m2)) == m2);
  CHECK_FALSE(opposite(m2) == m2);
  // transpose e_ij -> e_ji is an isomorphism M2 -> M2^op
  auto op = opposite(m2);
  Mat t(4, 4, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t(j * 2 + i, i * 2 + j) = 1;
  CHECK_NOTHROW(AlgebraHom::make(m2, op, t));
}

TEST_CASE("tensor and enveloping") {
  auto x2 = truncated_polynomial(F5, 2);
  auto k = field_algebra(F5);
  CHECK(tensor_algebra(x2, k) == x2);
  CHECK(tensor_algebra(x2, x2).dim() == 4);
  CHECK_NOTHROW(validate_associative(tensor_algebra(matrix_algebra(F5, 2), x2)));
  CHECK(enveloping(k, k).algebra == k);
  CHECK(enveloping(x2, k).algebra == x2);
  auto env = enveloping(matrix_algebra(F5, 2), x2);
  CHECK(env.algebra.dim() == 8);
  CHECK_THROWS_AS(tensor_algebra(x2, field_algebra(F7)), Error);
}

TEST_CASE("group algebras") {
  auto triv = group_algebra(F5, {{0}});
  CHECK(triv == field_algebra(F5));
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  CHECK(c2.is_commutative());
  CHECK(c2.basis_product(1, 1) == Vec{1, 0});
  auto s3 = group_algebra(F7, symmetric_group_s3_table());
  CHECK(s3.dim() == 6);
  CHECK_FALSE(s3.is_commutative());
  CHECK_THROWS_AS(validate_group({{0, 1}, {0, 1}}), Error);
}

TEST_CASE("algebra homomorphisms") {
  auto x2 = truncated_polynomial(F5, 2);
  CHECK_NOTHROW(identity_hom(x2));
  CHECK(unit_embedding(x2).matrix() == Mat(2, 1, 5, {1, 0}));
  try {
    AlgebraHom::make(x2, field_algebra(F5), Mat(1, 2, 5, {1, 1}));
    FAIL("expected NotMultiplicative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicative);
  }
  try {
    AlgebraHom::make(x2, field_algebra(F5), Mat(1, 2, 5, {0, 0}));
    FAIL("expected NotUnital");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnital);
  }
  auto quot = AlgebraHom::make(x2, field_algebra(F5), Mat(1, 2, 5, {1, 0}));
  auto comp = compose(unit_embedding(x2), quot);
  CHECK(comp.matrix().is_identity());
}

TEST_CASE("every constructor output validates") {
  std::vector<Algebra> all{field_algebra(F7),          group_algebra(F7, cyclic_group_table(3)),
                           truncated_polynomial(F7, 3), matrix_algebra(F7, 2),
                           upper_triangular(F7, 2),     direct_product(field_algebra(F7), field_algebra(F7))};
  for (auto& a : all) {
    CHECK_NOTHROW(validate_associative(a));
    CHECK_NOTHROW(validate_unit(a));
    CHECK_NOTHROW(validate_associative(opposite(a)));
  }
}
