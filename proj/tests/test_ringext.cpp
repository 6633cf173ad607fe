#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfw/ringext.hpp"

using namespace qfw;

namespace {
const PrimeField F5(5);

Extension quotient_x2() {
  auto x2 = truncated_polynomial(F5, 2);
  return make_extension(AlgebraHom::make(x2, field_algebra(F5), Mat(1, 2, 5, {1, 0})));
}

Extension diagonal_c2() {
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto prod = direct_product(c2, c2);
  Mat m(4, 2, 5);
  m(0, 0) = m(2, 0) = 1;
  m(1, 1) = m(3, 1) = 1;
  return make_extension(AlgebraHom::make(c2, prod, m));
}

LeftModule column_module(const Algebra& m2) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat e(2, 2, m2.p());
      e(i, j) = 1;
      act.push_back(e);
    }
  return LeftModule::make(m2, 2, act);
}
}  // namespace

TEST_CASE("make_extension") {
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto id = make_extension(identity_hom(c2));
  CHECK(id.rs.left_actions() == regular_bimodule(c2).left_actions());
  CHECK(id.sr.right_actions() == regular_bimodule(c2).right_actions());
  CHECK_NOTHROW(make_extension(unit_embedding(c2)));
  CHECK_NOTHROW(make_extension(unit_embedding(matrix_algebra(F5, 2))));
}

TEST_CASE("quasi-Frobenius extensions") {
  Rng rng(1);
  auto c2 = make_extension(unit_embedding(group_algebra(F5, cyclic_group_table(2))));
  CHECK(is_qf_extension(c2, rng).verdict == Verdict::Yes);
  auto m2 = make_extension(unit_embedding(matrix_algebra(F5, 2)));
  CHECK(is_qf_extension(m2, rng).verdict == Verdict::Yes);
  auto q = is_qf_extension(quotient_x2(), rng);
  CHECK(q.verdict == Verdict::No);
  CHECK(std::find(q.notes.begin(), q.notes.end(), "_R S not projective") != q.notes.end());
  auto t2 = make_extension(unit_embedding(upper_triangular(F5, 2)));
  CHECK(is_qf_extension(t2, rng).verdict == Verdict::No);
}

TEST_CASE("Frobenius extensions imply quasi-Frobenius") {
  Rng rng(2);
  std::vector<Extension> all{make_extension(unit_embedding(group_algebra(F5, cyclic_group_table(3)))),
                             make_extension(unit_embedding(matrix_algebra(F5, 2))), quotient_x2(), diagonal_c2(),
                             make_extension(unit_embedding(upper_triangular(F5, 2)))};
  CHECK(is_frobenius_extension(all[0], rng).verdict == Verdict::Yes);
  CHECK(is_frobenius_extension(all[1], rng).verdict == Verdict::Yes);
  for (auto& e : all)
    if (is_frobenius_extension(e, rng).verdict == Verdict::Yes) CHECK(is_qf_extension(e, rng).verdict == Verdict::Yes);
}

TEST_CASE("composition") {
  Rng rng(3);
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto id = make_extension(identity_hom(c2));
  CHECK(compose_check(id, id, rng).verdict == Verdict::Yes);
  auto unit = make_extension(unit_embedding(c2));
  auto r = compose_check(unit, diagonal_c2(), rng);
  CHECK(r.verdict == Verdict::Yes);
  // alpha not QF, beta QF: the composite must fail too.
  auto beta = make_extension(identity_hom(field_algebra(F5)));
  auto rq = compose_check(quotient_x2(), beta, rng);
  CHECK(rq.verdict == Verdict::Yes);
  bool saw_no = false;
  for (auto& c : rq.checks)
    if (c.name == "beta o alpha quasi-Frobenius") saw_no = c.verdict == Verdict::No;
  CHECK(saw_no);
}

TEST_CASE("pair witnesses") {
  Rng rng(4);
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto id = make_extension(identity_hom(c2));
  auto w0 = qf_pair_witness(id, regular_left(c2), rng);
  CHECK(w0.verified);
  auto unit = make_extension(unit_embedding(c2));
  auto triv = LeftModule::make(c2, 1, {Mat::identity(1, 5), Mat::identity(1, 5)});
  auto w1 = qf_pair_witness(unit, triv, rng);
  CHECK(w1.verified);
  CHECK((w1.alphabar * w1.alpha).is_identity());
  auto m2 = matrix_algebra(F5, 2);
  auto w2 = qf_pair_witness(make_extension(unit_embedding(m2)), column_module(m2), rng);
  CHECK(w2.verified);
  auto w3 = qf_pair_witness(diagonal_c2(), regular_left(direct_product(c2, c2)), rng);
  CHECK(w3.verified);
  CHECK_THROWS_AS(qf_pair_witness(quotient_x2(), regular_left(field_algebra(F5)), rng), Error);
}
