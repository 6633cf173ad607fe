#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qfw/matrix.hpp"
#include "qfw/poly.hpp"

using namespace qfw;

namespace {

Mat mat(std::size_t r, std::size_t c, Scalar p, std::vector<Scalar> e) { return Mat(r, c, p, std::move(e)); }

Mat random_mat(std::size_t r, std::size_t c, Scalar p, std::mt19937_64& g) {
  Mat m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(g() % p);
  return m;
}

// Rank by enumerating the span: |row space| = p^rank.
std::size_t brute_rank(const Mat& m) {
  Scalar p = m.modulus();
  std::size_t r = m.rows(), c = m.cols();
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  std::vector<Vec> seen;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v(c, 0);
    std::size_t x = code;
    for (std::size_t i = 0; i < r; ++i) {
      Scalar coef = x % p;
      x /= p;
      for (std::size_t j = 0; j < c; ++j) v[j] = (v[j] + coef * m(i, j)) % p;
    }
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  std::size_t k = 0, s = seen.size();
  while (s > 1) {
    s /= p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = Mat::identity(2, 5);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);

  auto z = rref(Mat(3, 3, 5));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());

  auto m = rref(mat(2, 2, 5, {2, 4, 1, 2}));
  CHECK(m.reduced == mat(2, 2, 5, {1, 2, 0, 0}));
  CHECK(m.rank == 1);
  CHECK(brute_rank(mat(2, 2, 5, {2, 4, 1, 2})) == 1);
}

TEST_CASE("rref agrees with brute-force rank and is idempotent") {
  std::mt19937_64 g(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + g() % 3, c = 1 + g() % 4;
    Mat m = random_mat(r, c, 5, g);
    if (t % 3 == 0) m.set_col(0, Vec(r, 0));
    auto rr = rref(m);
    CHECK(rr.rank == brute_rank(m));
    CHECK(rref(rr.reduced).reduced == rr.reduced);
  }
}

TEST_CASE("solve_right") {
  Mat b = mat(2, 2, 5, {1, 2, 3, 4});
  auto x = solve_right(Mat::identity(2, 5), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve_right(Mat(2, 2, 5), mat(2, 1, 5, {1, 0})));
  Mat a = mat(2, 2, 5, {1, 1, 0, 0});
  Mat rhs = mat(2, 1, 5, {3, 0});
  auto y = solve_right(a, rhs);
  REQUIRE(y);
  CHECK(a * *y == rhs);
  CHECK_THROWS_AS(solve_right(a, Mat(3, 1, 5)), Error);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Mat::identity(3, 7)).empty());
  CHECK(nullspace(Mat(3, 3, 7)).size() == 3);
  auto ns = nullspace(mat(1, 2, 5, {1, 2}));
  REQUIRE(ns.size() == 1);
  std::size_t count = 0;
  for (Scalar a = 0; a < 5; ++a)
    for (Scalar b = 0; b < 5; ++b)
      if ((a + 2 * b) % 5 == 0 && (a || b)) ++count;
  CHECK(count == 4);  // one line minus the origin
  CHECK((ns[0][0] + 2 * ns[0][1]) % 5 == 0);
  CHECK_FALSE(vec_is_zero(ns[0]));

  std::mt19937_64 g(3);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(2 + g() % 3, 3 + g() % 3, 7, g);
    auto basis = nullspace(m);
    CHECK(basis.size() == m.cols() - rank(m));
    for (auto& v : basis) CHECK(vec_is_zero(m * v));
  }
}

TEST_CASE("invert") {
  CHECK(*invert(Mat::identity(3, 11)) == Mat::identity(3, 11));
  CHECK_FALSE(invert(mat(2, 2, 5, {0, 1, 0, 0})));
  CHECK(*invert(mat(2, 2, 5, {2, 0, 0, 3})) == mat(2, 2, 5, {3, 0, 0, 2}));
  CHECK_THROWS_AS(invert(Mat(2, 3, 5)), Error);
  std::mt19937_64 g(11);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(3, 3, 5, g);
    auto inv = invert(m);
    CHECK(inv.has_value() == (rank(m) == 3));
    if (inv) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    }
  }
}

TEST_CASE("prime field guards") {
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  PrimeField f(7);
  for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("quotient projection and section") {
  Mat w = mat(1, 3, 5, {1, 1, 0});
  Quotient q(w, 3, 5);
  CHECK(q.dim() == 2);
  CHECK((q.projection() * q.section()).is_identity());
  CHECK(vec_is_zero(q.project({1, 1, 0})));
  CHECK(vec_is_zero(vec_add(q.project({1, 0, 0}), q.project({0, 1, 0}), 5)));
}

TEST_CASE("coordinates") {
  std::vector<Vec> b{{1, 2, 0}, {0, 1, 1}};
  Coordinates c(b, 3, 7);
  Vec v = vec_add(vec_scaled(b[0], 3, 7), vec_scaled(b[1], 5, 7), 7);
  CHECK(c(v) == Vec{3, 5});
  CHECK(c.contains(v));
  CHECK_FALSE(c.contains({1, 0, 0}));
}

TEST_CASE("polynomial factorization reconstructs its input") {
  Rng rng(5);
  std::mt19937_64 g(1);
  for (Scalar p : {5u, 7u, 11u}) {
    for (int t = 0; t < 15; ++t) {
      std::vector<Scalar> c(2 + g() % 6);
      for (auto& x : c) x = g() % p;
      c.back() = 1;
      Poly f(c, p);
      if (t % 4 == 0) f = f * f;
      auto fac = factor(f, rng);
      Poly prod = Poly::constant(1, p);
      for (auto& [q, m] : fac) {
        for (int i = 0; i < m; ++i) prod = prod * q;
        // irreducibility oracle: no monic factor of degree <= deg/2 by brute force for small degree
        if (q.degree() <= 3) {
          for (Scalar a = 0; a < p && q.degree() > 1; ++a) {
            Poly lin({(p - a) % p, 1}, p);
            CHECK_FALSE(divmod(q, lin).second.is_zero());
          }
        }
      }
      CHECK(prod == f.monic());
    }
  }
}
