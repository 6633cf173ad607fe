#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfw/modrep.hpp"

using namespace qfw;

namespace {
const PrimeField F5(5);

// dim Hom by counting every intertwining matrix (p^(rows*cols) candidates).
std::size_t brute_hom_dim(const Rep& m, const Rep& n) {
  std::size_t cells = m.dim * n.dim, total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= m.p;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Mat f(n.dim, m.dim, m.p);
    std::size_t x = code;
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) {
        f(i, j) = x % m.p;
        x /= m.p;
      }
    if (intertwines(f, m, n)) ++count;
  }
  std::size_t d = 0;
  while (count > 1) {
    count /= m.p;
    ++d;
  }
  return d;
}

LeftModule trivial_x2(const Algebra& x2) {
  return LeftModule::make(x2, 1, {Mat::identity(1, 5), Mat(1, 1, 5)});
}

// Column module of M2: e_ij acts as the matrix unit.
LeftModule column_module(const Algebra& m2) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat e(2, 2, 5);
      e(i, j) = 1;
      act.push_back(e);
    }
  return LeftModule::make(m2, 2, act);
}

LeftModule simple_of_product(const Algebra& ff, std::size_t which) {
  std::vector<Mat> act{Mat(1, 1, 5), Mat(1, 1, 5)};
  act[which](0, 0) = 1;
  return LeftModule::make(ff, 1, act);
}
}  // namespace

TEST_CASE("regular modules") {
  auto k = field_algebra(F5);
  CHECK(regular_left(k).dim() == 1);
  CHECK(regular_left(k).action(0).is_identity());
  CHECK(regular_left(matrix_algebra(F5, 2)).dim() == 4);
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto r = regular_left(c2);
  CHECK_NOTHROW(LeftModule::make(c2, r.dim(), r.actions()));
}

TEST_CASE("module validation failures") {
  auto x2 = truncated_polynomial(F5, 2);
  try {
    LeftModule::make(x2, 1, {Mat::identity(1, 5), Mat::identity(1, 5)});
    FAIL("x acting as 1 must fail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModuleLaw);
  }
}

TEST_CASE("hom spaces") {
  auto m2 = matrix_algebra(F5, 2);
  auto col = column_module(m2);
  auto h = hom_space(col, col);
  CHECK(h.contains(Mat::identity(2, 5)));
  CHECK(h.dim() == 1);
  CHECK(hom_space(regular_left(m2), col).dim() == col.dim());
  auto x2 = truncated_polynomial(F5, 2);
  CHECK(hom_space(regular_left(x2), trivial_x2(x2)).dim() == 1);
  auto ff = direct_product(field_algebra(F5), field_algebra(F5));
  CHECK(hom_space(simple_of_product(ff, 0), simple_of_product(ff, 1)).dim() == 0);
  for (auto& b : h.basis) CHECK(intertwines(b, col.full_rep(), col.full_rep()));

  // brute-force oracle on small pairs
  std::vector<LeftModule> mods{regular_left(x2), trivial_x2(x2), direct_sum(trivial_x2(x2), trivial_x2(x2))};
  for (auto& a : mods)
    for (auto& b : mods)
      if (a.dim() * b.dim() <= 4) CHECK(hom_space(a, b).dim() == brute_hom_dim(a.full_rep(), b.full_rep()));
}

TEST_CASE("bimodules") {
  auto k = field_algebra(F5);
  auto v = Bimodule::make(k, k, {Mat::identity(3, 5)}, {Mat::identity(3, 5)});
  CHECK(v.dim() == 3);
  auto m2 = matrix_algebra(F5, 2);
  auto reg = regular_bimodule(m2);
  CHECK_NOTHROW(Bimodule::make(m2, m2, reg.left_actions(), reg.right_actions()));
  // Right action given by left multiplication fails to commute with left multiplication.
  std::vector<Mat> bad;
  for (std::size_t i = 0; i < 4; ++i) bad.push_back(m2.left_mult_basis(i));
  try {
    Bimodule::make(m2, opposite(m2), reg.left_actions(), bad);
    FAIL("noncommuting actions accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ActionsDoNotCommute);
  }
  auto left = restrict_bimodule(reg, Side::Left);
  CHECK(left.actions() == regular_left(m2).actions());
  auto carrier = reg.carrier();
  auto back = bimodule_from_carrier(m2, m2, carrier);
  CHECK(back.left_actions() == reg.left_actions());
  CHECK(back.right_actions() == reg.right_actions());
}

TEST_CASE("tensor products") {
  auto k = field_algebra(F5);
  auto x2 = truncated_polynomial(F5, 2);
  auto s = regular_bimodule(x2);
  // S (x)_k S has no relations.
  auto sk = make_bimodule_unchecked(x2, k, 2, s.left_actions(), {Mat::identity(2, 5)});
  auto ks = make_bimodule_unchecked(k, x2, 2, {Mat::identity(2, 5)}, s.right_actions());
  CHECK(tensor_over(k, sk, ks).module.dim() == 4);
  // A (x)_A M has dim M.
  auto m2 = matrix_algebra(F5, 2);
  auto col = as_bimodule(column_module(m2));
  auto t = tensor_over(m2, regular_bimodule(m2), col);
  CHECK(t.module.dim() == 2);
  CHECK((t.projection * t.section).is_identity());
  CHECK_NOTHROW(Bimodule::make(t.module.left_algebra(), t.module.right_algebra(), t.module.left_actions(),
                               t.module.right_actions()));
}

TEST_CASE("duals") {
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto reg = regular_bimodule(c2);
  auto ld = left_dual(reg);
  auto rd = right_dual(reg);
  CHECK(ld.module.dim() == 2);
  CHECK(rd.module.dim() == 2);
  auto k = field_algebra(F5);
  auto v = Bimodule::make(k, k, {Mat::identity(3, 5)}, {Mat::identity(3, 5)});
  CHECK(left_dual(v).module.dim() == 3);
  CHECK(right_dual(v).module.dim() == 3);
  auto m2 = matrix_algebra(F5, 2);
  auto r2 = regular_bimodule(m2);
  CHECK(left_dual(right_dual(r2).module).module.dim() == 4);
}

TEST_CASE("projectivity") {
  auto x2 = truncated_polynomial(F5, 2);
  auto w = is_fg_projective(regular_left(x2));
  REQUIRE(w);
  CHECK((w->pi * w->sigma).is_identity());
  CHECK_FALSE(is_fg_projective(trivial_x2(x2)));
  // Exhaustive oracle: F5[x]/(x^2) has only the idempotents 0 and 1.
  std::size_t idem = 0;
  for (Scalar a = 0; a < 5; ++a)
    for (Scalar b = 0; b < 5; ++b) {
      Vec e{a, b};
      if (x2.mul(e, e) == e) ++idem;
    }
  CHECK(idem == 2);
  auto m2 = matrix_algebra(F5, 2);
  auto col = column_module(m2);
  auto cw = is_fg_projective(col);
  REQUIRE(cw);
  CHECK((cw->pi * cw->sigma).is_identity());
  auto free = free_module_rep(m2, cw->rank);
  CHECK(intertwines(cw->pi, free, col.full_rep()));
  CHECK(intertwines(cw->sigma, col.full_rep(), free));
}
