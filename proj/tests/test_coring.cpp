#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "qfw/coring.hpp"

using namespace qfw;

namespace {
const PrimeField F5(5);

// A = F5[x]/(x^2), C = A + k t with x acting by zero on t from both sides,
// Delta(a) = a (x) 1, Delta(t) = t (x) 1 + 1 (x) t, eps(t) = 0.
Coring non_projective() {
  auto a = truncated_polynomial(F5, 2);
  Mat one = Mat::identity(3, 5);
  Mat x(3, 3, 5);
  x(1, 0) = 1;
  auto c = Bimodule::make(a, a, {one, x}, {one, x});
  auto sq = tensor_over(a, c, c);
  Mat raw(9, 3, 5);
  raw(0, 0) = 1;
  raw(3, 1) = 1;
  raw(6, 2) = 1;
  raw(2, 2) = 1;
  Mat eps(2, 3, 5);
  eps(0, 0) = eps(1, 1) = 1;
  return make_coring(c, sq.projection * raw, eps);
}

Extension unit_of(const Algebra& s) { return make_extension(unit_embedding(s)); }

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace

TEST_CASE("trivial coring") {
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto t = trivial_coring(c2);
  CHECK(t.dim() == 2);
  CHECK(is_trivial_coring(t));
  CHECK(t.eps.is_identity());
  Mat zero(2, 2, 5);
  try {
    make_coring(t.carrier, t.delta, zero);
    FAIL("zero counit accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CounitFails);
  }
  Mat twice = t.delta + t.delta;
  CHECK_THROWS(make_coring(t.carrier, twice, t.eps));
}

TEST_CASE("Sweedler coring of F5 in F5[x]/(x^2)") {
  Rng rng(3);
  auto c = sweedler(unit_of(truncated_polynomial(F5, 2)));
  CHECK(c.dim() == 4);
  CHECK_FALSE(is_trivial_coring(c));
  auto ld = left_dual_ring(c);
  auto rd = right_dual_ring(c);
  // *C is End of S over F5 here.
  CHECK(ld.ring.dim() == 4);
  CHECK(rd.ring.dim() == 4);
  CHECK_NOTHROW(coring_over_left_dual(c, ld));
  CHECK_NOTHROW(left_dual_as_a_bimodule(c, ld));
  CHECK_NOTHROW(left_dual_as_bimodule_over_a(c, ld));
  CHECK_NOTHROW(coring_over_right_dual(c, rd));
  CHECK_NOTHROW(right_dual_as_bimodule(c, rd));
  auto r = is_qf_coring(c, rng);
  CHECK(r.verdict == Verdict::Yes);
}

TEST_CASE("Sweedler coring of F5 in M2(F5)") {
  Rng rng(4);
  Report r;
  double t = seconds([&] {
    auto c = sweedler(unit_of(matrix_algebra(F5, 2)));
    CHECK(c.dim() == 16);
    r = is_qf_coring(c, rng);
  });
  CHECK(r.verdict == Verdict::Yes);
  CHECK(t < 30.0);
  MESSAGE("M2 Sweedler coring decided in " << t << " s");
}

TEST_CASE("coring with a non-projective side") {
  Rng rng(5);
  auto c = non_projective();
  CHECK_FALSE(is_fg_projective(restrict_bimodule(c.carrier, Side::Left)));
  auto r = is_qf_coring(c, rng);
  for (auto& ch : r.checks)
    if (ch.name.rfind("condition", 0) == 0) MESSAGE(ch.name << ": " << to_string(ch.verdict));
  CHECK(r.verdict == Verdict::No);
  CHECK(std::find(r.notes.begin(), r.notes.end(), "_A C not projective") != r.notes.end());
}

TEST_CASE("comodules and cotensor") {
  auto c = sweedler(unit_of(truncated_polynomial(F5, 2)));
  auto mr = regular_comodule(c, Side::Right);
  auto nl = regular_comodule(c, Side::Left);
  auto co = cotensor(c, mr, nl);
  CHECK(co.dim() == c.dim());
  auto mod = comodule_to_module(c, mr);
  CHECK(mod.dim() == c.dim());
  auto lmod = comodule_to_module(c, nl);
  CHECK(lmod.dim() == c.dim());

  Mat bad = c.delta + c.delta;
  CHECK_THROWS(make_comodule(c, Side::Right, mr.carrier, bad));

  auto t = trivial_coring(truncated_polynomial(F5, 3));
  auto tr = regular_comodule(t, Side::Right);
  auto tl = regular_comodule(t, Side::Left);
  CHECK(cotensor(t, tr, tl).dim() == 3);
  CHECK(left_dual_ring(t).ring.dim() == 3);
}

TEST_CASE("comodule to module needs projectivity") {
  auto c = non_projective();
  auto mr = regular_comodule(c, Side::Right);
  try {
    comodule_to_module(c, mr);
    FAIL("expected NotFgpOverBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFgpOverBase);
  }
}

TEST_CASE("coring homomorphisms between trivial corings") {
  Rng rng(6);
  auto c2 = group_algebra(F5, cyclic_group_table(2));
  auto m2 = matrix_algebra(F5, 2);
  auto rho = unit_embedding(c2);
  auto rep = validate_coring_hom({rho, trivial_coring(rho.source()), trivial_coring(c2), rho.matrix()}, rng);
  CHECK(rep.verdict == Verdict::Yes);
  CHECK(rep.checks.back().verdict == Verdict::Yes);

  auto x2 = truncated_polynomial(F5, 2);
  auto q = AlgebraHom::make(x2, field_algebra(F5), Mat(1, 2, 5, {1, 0}));
  auto rq = validate_coring_hom({q, trivial_coring(x2), trivial_coring(field_algebra(F5)), q.matrix()}, rng);
  CHECK(rq.verdict == Verdict::Yes);
  CHECK(rq.checks.back().verdict == Verdict::No);

  auto u = unit_embedding(m2);
  Mat wrong = u.matrix() + u.matrix();
  auto bad = validate_coring_hom({u, trivial_coring(u.source()), trivial_coring(m2), wrong}, rng);
  CHECK(bad.verdict == Verdict::No);
}
