#include "qfw/decomp.hpp"

#include <algorithm>

namespace qfw {

namespace {

// Tr(L^e) modulo q for an integer lift L of a matrix with entries in [0, p).
std::uint64_t lifted_trace_power(const Mat& m, std::uint64_t e, std::uint64_t q) {
  std::size_t n = m.rows();
  using Big = std::vector<std::uint64_t>;
  auto mul = [&](const Big& a, const Big& b) {
    Big c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t aik = a[i * n + k];
        if (!aik) continue;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % q;
      }
    return c;
  };
  Big base(m.data().begin(), m.data().end()), acc(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1 % q;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + acc[i * n + i]) % q;
  return t;
}

std::vector<Vec> combine_basis(const std::vector<Vec>& basis, const std::vector<Vec>& coeffs, std::size_t n,
                               Scalar p) {
  std::vector<Vec> out;
  for (auto& c : coeffs) {
    Vec v(n, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k]) v = vec_add(v, vec_scaled(basis[k], c[k], p), p);
    out.push_back(std::move(v));
  }
  return out;
}

Vec algebra_power(const Algebra& a, Vec x, std::uint64_t e) {
  Vec acc = a.unit();
  while (e) {
    if (e & 1) acc = a.mul(acc, x);
    e >>= 1;
    if (e) x = a.mul(x, x);
  }
  return acc;
}

std::optional<Vec> split_by_element(const Algebra& a, const Vec& x, Rng& rng) {
  Poly m = minimal_polynomial(a, x);
  auto fac = factor(m, rng);
  if (fac.size() < 2) return std::nullopt;
  Scalar p = a.p();
  Poly g = Poly::constant(1, p);
  for (int i = 0; i < fac[0].second; ++i) g = g * fac[0].first;
  Poly h = divmod(m, g).first;
  auto eg = ext_gcd(g, h);
  return evaluate(a, eg.v * h, x);
}

// Nontrivial idempotent of a semisimple algebra, nullopt when it is a field.
std::optional<Vec> split_semisimple(const Algebra& a, Rng& rng) {
  std::size_t n = a.dim();
  Scalar p = a.p();
  if (n <= 1) return std::nullopt;
  if (a.is_commutative()) {
    // Fixed points of x -> x^p: one copy of F_p per simple factor.
    Mat frob(n, n, p);
    for (std::size_t j = 0; j < n; ++j) frob.set_col(j, algebra_power(a, a.basis(j), p));
    auto fixed = nullspace(frob - Mat::identity(n, p));
    if (fixed.size() <= 1) return std::nullopt;
    Coordinates unit_span(std::vector<Vec>{a.unit()}, n, p);
    for (auto& b : fixed) {
      if (unit_span.contains(b)) continue;
      if (auto e = split_by_element(a, b, rng)) return e;
    }
    throw Error(ErrorKind::Internal, "split commutative semisimple algebra without an idempotent");
  }
  // Finite division rings are commutative, so a noncommutative semisimple
  // algebra always has a nontrivial idempotent.
  for (std::size_t i = 0; i < n; ++i)
    if (auto e = split_by_element(a, a.basis(i), rng)) return e;
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  for (int t = 0; t < 1000; ++t) {
    Vec x(n);
    for (auto& v : x) v = dist(rng);
    if (auto e = split_by_element(a, x, rng)) return e;
  }
  throw Error(ErrorKind::Internal, "no splitting element found in noncommutative semisimple algebra");
}

struct Leaf {
  Rep rep;
  Mat inj;
  Mat proj;
};

void split_rec(const Rep& m, Rng& rng, std::vector<Leaf>& out, const Mat& inj, const Mat& proj) {
  if (m.dim == 0) return;
  EndRing end = end_ring(m);
  auto e = find_idempotent(end.algebra, rng);
  if (!e) {
    out.push_back({m, inj, proj});
    return;
  }
  Mat f = end.maps.combine(*e);
  Mat g = Mat::identity(m.dim, m.p) - f;
  for (const Mat* idem : {&f, &g}) {
    auto piv = rref(*idem).pivots;
    Mat b(m.dim, piv.size(), m.p);
    for (std::size_t k = 0; k < piv.size(); ++k) b.set_col(k, idem->col(piv[k]));
    auto q = solve_right(b, *idem);
    if (!q || !(*q * b).is_identity()) throw Error(ErrorKind::Internal, "idempotent image splitting failed");
    Rep sub = restrict_rep(m, *q, b);
    split_rec(sub, rng, out, inj * b, *q * proj);
  }
}

std::vector<Scalar> encoding(const Rep& r) {
  std::vector<Scalar> enc;
  for (auto& op : r.ops) enc.insert(enc.end(), op.data().begin(), op.data().end());
  return enc;
}

}  // namespace

// ---------------------------------------------------------------------------

EndRing end_ring(const Rep& m) {
  HomSpace h = hom_space(m, m);
  std::size_t d = h.dim();
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v = h.coordinates(h.basis[i] * h.basis[j]);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = v[k];
    }
  Vec unit = h.coordinates(Mat::identity(m.dim, m.p));
  return {Algebra::make(PrimeField(m.p), d, std::move(c), std::move(unit)), std::move(h)};
}

Algebra end_ring(const LeftModule& m) { return end_ring(m.rep()).algebra; }

std::vector<Vec> radical(const Algebra& e) {
  std::size_t n = e.dim();
  Scalar p = e.p();
  std::vector<Vec> ideal;
  for (std::size_t i = 0; i < n; ++i) ideal.push_back(e.basis(i));
  // I_i = { a in I_(i-1) : g_i(ab) = 0 for all b }, g_i(a) = Tr(L_a^(p^i)) / p^i mod p.
  for (std::uint64_t pi = 1; pi <= n && !ideal.empty(); pi *= p) {
    std::uint64_t q = pi * p;
    Mat g(n, ideal.size(), p);
    for (std::size_t k = 0; k < ideal.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t t = lifted_trace_power(e.left_mult(e.mul(ideal[k], e.basis(j))), pi, q);
        if (t % pi) throw Error(ErrorKind::Internal, "lifted trace not divisible");
        g(j, k) = static_cast<Scalar>((t / pi) % p);
      }
    ideal = combine_basis(ideal, nullspace(g), n, p);
  }
  // Nilpotency check by explicit powers of the ideal.
  std::vector<Vec> power = ideal;
  for (std::size_t step = 0; step <= n && !power.empty(); ++step) {
    std::vector<Vec> next;
    for (auto& x : power)
      for (auto& y : ideal) next.push_back(e.mul(x, y));
    Mat rows = next.empty() ? Mat(0, n, p) : Mat::from_columns(next, n, p).transpose();
    auto rr = rref(rows);
    power.clear();
    for (std::size_t r = 0; r < rr.rank; ++r) {
      auto row = rr.reduced.row(r);
      power.emplace_back(row.begin(), row.end());
    }
  }
  if (!power.empty()) throw Error(ErrorKind::Internal, "computed radical is not nilpotent");
  return ideal;
}

SemisimpleQuotient semisimple_quotient(const Algebra& e) {
  std::size_t n = e.dim();
  Scalar p = e.p();
  auto j = radical(e);
  Mat rows = j.empty() ? Mat(0, n, p) : Mat::from_columns(j, n, p).transpose();
  Quotient quo(rows, n, p);
  std::size_t d = quo.dim();
  const auto& reps = quo.representatives();
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vec v = quo.project(e.basis_product(reps[a], reps[b]));
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = v[k];
    }
  return {Algebra::make(e.field(), d, std::move(c), quo.project(e.unit())), std::move(quo)};
}

Poly minimal_polynomial(const Algebra& e, const Vec& x) {
  std::size_t n = e.dim();
  Scalar p = e.p();
  std::vector<Vec> powers{e.unit()};
  for (;;) {
    Vec next = e.mul(powers.back(), x);
    Mat a = Mat::from_columns(powers, n, p);
    auto sol = solve_right(a, Mat::column(next, p));
    if (sol) {
      std::vector<Scalar> c(powers.size() + 1, 0);
      for (std::size_t i = 0; i < powers.size(); ++i) c[i] = PrimeField(p).neg((*sol)(i, 0));
      c.back() = 1;
      return Poly(std::move(c), p);
    }
    powers.push_back(std::move(next));
  }
}

Vec evaluate(const Algebra& e, const Poly& f, const Vec& x) {
  Vec acc = e.zero();
  for (int i = f.degree(); i >= 0; --i) {
    acc = e.mul(acc, x);
    acc = vec_add(acc, vec_scaled(e.unit(), f[static_cast<std::size_t>(i)], e.p()), e.p());
  }
  return acc;
}

std::optional<Vec> find_idempotent(const Algebra& e, Rng& rng) {
  if (e.dim() <= 1) return std::nullopt;
  auto sq = semisimple_quotient(e);
  auto ebar = split_semisimple(sq.algebra, rng);
  if (!ebar) return std::nullopt;
  Scalar p = e.p();
  Vec x = sq.quotient.section() * *ebar;
  for (int it = 0; it < 64; ++it) {
    Vec x2 = e.mul(x, x);
    if (x2 == x) return x;
    Vec x3 = e.mul(x2, x);
    x = vec_add(vec_scaled(x2, 3 % p, p), vec_scaled(x3, p - 2, p), p);
  }
  throw Error(ErrorKind::Internal, "idempotent lifting did not converge");
}

// ---------------------------------------------------------------------------

std::optional<Mat> iso_indecomposable(const Rep& m, const Rep& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Mat(0, 0, m.p);
  HomSpace mn = hom_space(m, n);
  if (mn.dim() == 0) return std::nullopt;
  HomSpace nm = hom_space(n, m);
  for (auto& f : mn.basis) {
    if (invert(f)) return f;
    for (auto& g : nm.basis)
      if (invert(g * f)) return f;
  }
  return std::nullopt;
}

Decomposition decompose(const Rep& m, Rng& rng) {
  std::vector<Leaf> leaves;
  split_rec(m, rng, leaves, Mat::identity(m.dim, m.p), Mat::identity(m.dim, m.p));
  Decomposition d{m, {}};
  for (auto& leaf : leaves) {
    bool placed = false;
    for (auto& s : d.summands) {
      auto f = iso_indecomposable(s.module, leaf.rep);
      if (!f) continue;
      auto finv = invert(*f);
      s.injections.push_back(leaf.inj * *f);
      s.projections.push_back(*finv * leaf.proj);
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) d.summands.push_back({leaf.rep, 1, {leaf.inj}, {leaf.proj}});
  }
  std::stable_sort(d.summands.begin(), d.summands.end(), [](const Summand& a, const Summand& b) {
    if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
    return encoding(a.module) < encoding(b.module);
  });
  return d;
}

Decomposition decompose(const LeftModule& m, Rng& rng) { return decompose(m.rep(), rng); }
Decomposition decompose(const Bimodule& m, Rng& rng) { return decompose(m.rep(), rng); }

std::optional<Mat> iso(const Rep& m, const Rep& n, Rng& rng, int trials) {
  if (m.dim != n.dim || m.ops.size() != n.ops.size()) return std::nullopt;
  if (m.dim == 0) return Mat(0, 0, m.p);
  HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return std::nullopt;
  std::uniform_int_distribution<Scalar> dist(0, m.p - 1);
  for (int t = 0; t < trials; ++t) {
    Vec c(h.dim());
    for (auto& v : c) v = dist(rng);
    Mat f = h.combine(c);
    if (invert(f)) return f;
  }
  // Deterministic fallback: match Krull-Schmidt classes.
  auto dm = decompose(m, rng);
  auto dn = decompose(n, rng);
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  Mat total(n.dim, m.dim, m.p);
  std::vector<bool> used(dn.summands.size(), false);
  for (auto& sm : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j] || dn.summands[j].multiplicity != sm.multiplicity) continue;
      auto theta = iso_indecomposable(sm.module, dn.summands[j].module);
      if (!theta) continue;
      for (std::size_t k = 0; k < sm.multiplicity; ++k)
        total = total + dn.summands[j].injections[k] * *theta * sm.projections[k];
      used[j] = matched = true;
    }
    if (!matched) return std::nullopt;
  }
  if (!invert(total) || !intertwines(total, m, n)) throw Error(ErrorKind::Internal, "assembled isomorphism invalid");
  return total;
}

std::optional<Mat> iso(const LeftModule& m, const LeftModule& n, Rng& rng, int trials) {
  if (!(m.algebra() == n.algebra())) throw Error(ErrorKind::Usage, "iso: algebra mismatch");
  return iso(m.rep(), n.rep(), rng, trials);
}

std::optional<Mat> iso(const Bimodule& m, const Bimodule& n, Rng& rng, int trials) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw Error(ErrorKind::Usage, "iso: algebra mismatch");
  return iso(m.rep(), n.rep(), rng, trials);
}

bool decomposition_is_valid(const Decomposition& d) {
  const Rep& m = d.module;
  Mat sum(m.dim, m.dim, m.p);
  std::vector<std::pair<const Mat*, const Mat*>> copies;
  for (auto& s : d.summands) {
    if (s.injections.size() != s.multiplicity || s.projections.size() != s.multiplicity) return false;
    for (std::size_t k = 0; k < s.multiplicity; ++k) {
      if (!intertwines(s.injections[k], s.module, m) || !intertwines(s.projections[k], m, s.module)) return false;
      sum = sum + s.injections[k] * s.projections[k];
      copies.emplace_back(&s.injections[k], &s.projections[k]);
    }
  }
  if (!sum.is_identity()) return false;
  for (std::size_t a = 0; a < copies.size(); ++a)
    for (std::size_t b = 0; b < copies.size(); ++b) {
      Mat c = *copies[a].second * *copies[b].first;
      if (a == b ? !c.is_identity() : !c.is_zero()) return false;
    }
  return true;
}

}  // namespace qfw
