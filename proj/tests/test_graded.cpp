#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qfw/graded.hpp"

using namespace qfw;

namespace {
const PrimeField F5(5);

GradedRing group_ring_c2() {
  auto c2 = cyclic_group_table(2);
  return GradedRing::from_algebra(group_algebra(F5, c2), c2, {0, 1});
}

// Basis e11, e12, e22 with the diagonal in degree 0.
GradedRing triangular_c2() {
  auto t2 = upper_triangular(F5, 2);
  std::vector<std::size_t> deg(3);
  for (std::size_t i = 0; i < 3; ++i) {
    // The off-diagonal unit is the basis vector whose square is zero.
    deg[i] = vec_is_zero(t2.basis_product(i, i)) ? 1 : 0;
  }
  return GradedRing::from_algebra(t2, cyclic_group_table(2), deg);
}

GradedRing trivially_graded(const Algebra& a, std::size_t order) {
  return GradedRing::from_algebra(a, cyclic_group_table(order), std::vector<std::size_t>(a.dim(), 0));
}

bool same(const GradedModule& a, const GradedModule& b) {
  return a.components == b.components && a.total.actions() == b.total.actions();
}

// Independent decision of R ~ Coind(R_e): mutual membership in add over the
// full enveloping action lists.
bool oracle_similar(const GradedRing& r) {
  auto m = graded_ring_bimodule(r).full_rep();
  auto n = coinduced_base_bimodule(r).full_rep();
  return oracle::in_add_by_approximation(m, n) && oracle::in_add_by_approximation(n, m);
}
}  // namespace

TEST_CASE("graded ring assembly") {
  auto r = group_ring_c2();
  CHECK(r.base().dim() == 1);
  CHECK(r.component(1).size() == 1);
  CHECK(r.total().dim() == 2);
  auto t = triangular_c2();
  CHECK(t.base().dim() == 2);
  CHECK(t.base().is_commutative());

  // x^2 = 1 in degree g*g = e is fine; a product landing in the wrong component is not.
  auto x3 = truncated_polynomial(F5, 3);
  CHECK_THROWS_AS(GradedRing::from_algebra(x3, cyclic_group_table(2), {0, 1, 1}), Error);
  CHECK_NOTHROW(GradedRing::from_algebra(x3, cyclic_group_table(2), {0, 1, 0}));

  // Unit outside R_e.
  try {
    GradedRing::make(F5, cyclic_group_table(2), {0, 1},
                     {Mat(0, 0, 5), Mat(1, 0, 5), Mat(1, 0, 5), Mat(0, 1, 5, {})});
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::GradingViolation || e.kind() == ErrorKind::UnitViolation ||
           e.kind() == ErrorKind::Usage));
  }
}

TEST_CASE("restriction at e") {
  auto r = group_ring_c2();
  auto re = restrict_e(r, regular_graded(r));
  CHECK(re.dim() == 1);
  CHECK(re.actions() == regular_left(r.base()).actions());
  auto t = triangular_c2();
  CHECK(restrict_e(t, regular_graded(t)).actions() == regular_left(t.base()).actions());
}

TEST_CASE("induction and its unit") {
  Rng rng(1);
  for (const auto& r : {group_ring_c2(), triangular_c2()}) {
    auto base = regular_left(r.base());
    auto ind = induce(r, base);
    CHECK(ind.total.dim() == r.total().dim());
    for (std::size_t y = 0; y < r.order(); ++y) CHECK(ind.components[y].size() == r.component(y).size());
    CHECK(iso(ind.total, regular_left(r.total()), rng).has_value());
    auto unit = induction_unit(r, base);
    CHECK(is_module_iso(unit, base, restrict_e(r, ind)));
  }
  // Trivial group: induction is the identity.
  auto x2 = truncated_polynomial(F5, 2);
  auto triv = trivially_graded(x2, 1);
  auto n = regular_left(x2);
  CHECK(induce(triv, n).total.actions() == n.actions());
}

TEST_CASE("coinduction and its counit") {
  auto r = group_ring_c2();
  auto f = regular_left(r.base());
  auto co = coinduce(r, f);
  CHECK(co.components[0].size() == 1);
  CHECK(co.components[1].size() == 1);
  CHECK(is_module_iso(coinduction_counit(r, f), restrict_e(r, co), f));

  auto t = triangular_c2();
  auto simple = LeftModule::make(t.base(), 1, {Mat(1, 1, 5, {1}), Mat(1, 1, 5, {0})});
  for (const auto& n : {regular_left(t.base()), simple}) {
    auto c = coinduce(t, n);
    CHECK(is_module_iso(coinduction_counit(t, n), restrict_e(t, c), n));
    auto i = induce(t, n);
    CHECK(is_module_iso(induction_unit(t, n), n, restrict_e(t, i)));
  }

  auto x2 = truncated_polynomial(F5, 2);
  auto triv = trivially_graded(x2, 2);
  Rng rng(2);
  auto n = regular_left(x2);
  CHECK(iso(coinduce(triv, n).total, regular_left(x2), rng).has_value());
}

TEST_CASE("suspension is a group action") {
  auto r = trivially_graded(group_algebra(F5, cyclic_group_table(3)), 3);
  auto g3 = GradedRing::from_algebra(group_algebra(F5, cyclic_group_table(3)), cyclic_group_table(3), {0, 1, 2});
  for (const auto* ring : {&r, &g3}) {
    auto m = regular_graded(*ring);
    CHECK(same(suspend(*ring, m, ring->identity()), m));
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(same(suspend(*ring, suspend(*ring, m, x), ring->inverse(x)), m));
      CHECK(suspend(*ring, m, x).components[ring->identity()] == m.components[x]);
      for (std::size_t y = 0; y < 3; ++y)
        CHECK(same(suspend(*ring, m, ring->mul(x, y)), suspend(*ring, suspend(*ring, m, y), x)));
    }
  }
}

TEST_CASE("quasi-Frobenius restriction functor") {
  Rng rng(3);
  auto r = is_qf_restriction(group_ring_c2(), rng);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(oracle_similar(group_ring_c2()));

  auto triv = is_qf_restriction(trivially_graded(upper_triangular(F5, 2), 2), rng);
  CHECK(triv.verdict == Verdict::Yes);

  auto t = triangular_c2();
  auto rt = is_qf_restriction(t, rng);
  CHECK((rt.verdict == Verdict::Yes) == oracle_similar(t));
  MESSAGE("T2 graded by C2: " << to_string(rt.verdict));
}
