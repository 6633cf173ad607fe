#include "qfw/algebra.hpp"

#include <array>
#include <mutex>

namespace qfw {

struct Algebra::Impl {
  explicit Impl(PrimeField f) : field(f) {}
  PrimeField field;
  std::size_t dim = 0;
  std::vector<Scalar> c;
  Vec unit;
  std::vector<Vec> products;  // n*n
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;  // nonzeros of e_i e_j
  std::vector<Mat> left, right;
  bool commutative = true;
  mutable std::once_flag gens_once;
  mutable std::vector<std::size_t> gens;
};

Algebra Algebra::build(PrimeField field, std::size_t dim, std::vector<Scalar> c, Vec unit, bool validate) {
  if (dim == 0) throw Error(ErrorKind::Usage, "algebra of dimension 0");
  if (c.size() != dim * dim * dim) throw Error(ErrorKind::Usage, "structure constant count is not dim^3");
  if (unit.size() != dim) throw Error(ErrorKind::Usage, "unit length differs from dim");
  Scalar p = field.p();
  for (auto x : c)
    if (x >= p) throw Error(ErrorKind::Usage, "structure constant outside [0, p)");
  for (auto x : unit)
    if (x >= p) throw Error(ErrorKind::Usage, "unit coordinate outside [0, p)");
  auto impl = std::make_shared<Impl>(field);
  auto& I = *impl;
  I.dim = dim;
  I.c = std::move(c);
  I.unit = std::move(unit);
  I.products.resize(dim * dim);
  I.sparse.resize(dim * dim);
  I.left.assign(dim, Mat(dim, dim, p));
  I.right.assign(dim, Mat(dim, dim, p));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        Scalar x = I.c[(i * dim + j) * dim + k];
        v[k] = x;
        if (x) I.sparse[i * dim + j].emplace_back(k, x);
        I.left[i](k, j) = x;
        I.right[j](k, i) = x;
      }
      I.products[i * dim + j] = std::move(v);
    }
  for (std::size_t i = 0; i < dim && I.commutative; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (I.products[i * dim + j] != I.products[j * dim + i]) {
        I.commutative = false;
        break;
      }
  Algebra a(std::move(impl));
  if (validate) {
    validate_unit(a);
    validate_associative(a);
  }
  return a;
}

Algebra Algebra::make(PrimeField field, std::size_t dim, std::vector<Scalar> structconsts, Vec unit) {
  return build(field, dim, std::move(structconsts), std::move(unit), true);
}

PrimeField Algebra::field() const { return impl_->field; }
Scalar Algebra::p() const { return impl_->field.p(); }
std::size_t Algebra::dim() const { return impl_->dim; }
const Vec& Algebra::unit() const { return impl_->unit; }
Scalar Algebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  return impl_->c[(i * impl_->dim + j) * impl_->dim + k];
}
const std::vector<Scalar>& Algebra::structconsts() const { return impl_->c; }
const Vec& Algebra::basis_product(std::size_t i, std::size_t j) const { return impl_->products[i * impl_->dim + j]; }
const Mat& Algebra::left_mult_basis(std::size_t i) const { return impl_->left[i]; }
const Mat& Algebra::right_mult_basis(std::size_t i) const { return impl_->right[i]; }
bool Algebra::is_commutative() const { return impl_->commutative; }

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  Scalar p = this->p();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      std::uint64_t s = std::uint64_t(x[i]) * y[j] % p;
      for (auto [k, v] : impl_->sparse[i * n + j]) acc[k] = (acc[k] + s * v) % p;
    }
  }
  return Vec(acc.begin(), acc.end());
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(dim(), dim(), p());
  for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(impl_->left[i], x[i]);
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m(dim(), dim(), p());
  for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(impl_->right[i], x[i]);
  return m;
}

const std::vector<std::size_t>& Algebra::generators() const {
  std::call_once(impl_->gens_once, [this] {
    // Greedy: add basis elements until the generated subalgebra is everything.
    std::size_t n = dim();
    Scalar p = this->p();
    std::vector<std::size_t> gens;
    std::vector<Vec> span{unit()};
    auto in_span = [&](const std::vector<Vec>& s, const Vec& v) {
      auto m = Mat::from_columns(s, n, p);
      return solve_right(m, Mat::column(v, p)).has_value();
    };
    auto close = [&](std::vector<Vec> s) {
      // Closure of span(s) under right multiplication by the current generators.
      for (std::size_t idx = 0; idx < s.size(); ++idx) {
        for (auto g : gens) {
          Vec w = mul(s[idx], basis(g));
          if (!in_span(s, w)) s.push_back(w);
          if (s.size() == n) return s;
        }
      }
      return s;
    };
    for (std::size_t i = 0; i < n && span.size() < n; ++i) {
      if (in_span(span, basis(i)) && !gens.empty()) continue;
      gens.push_back(i);
      span = close(std::vector<Vec>{unit()});
    }
    impl_->gens = std::move(gens);
  });
  return impl_->gens;
}

bool Algebra::operator==(const Algebra& o) const {
  if (impl_ == o.impl_) return true;
  return p() == o.p() && dim() == o.dim() && impl_->c == o.impl_->c && unit() == o.unit();
}

void validate_unit(const Algebra& a) {
  std::size_t n = a.dim();
  Mat lu = a.left_mult(a.unit()), ru = a.right_mult(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = a.basis(i);
    if (lu * ei != ei || ru * ei != ei)
      throw Error(ErrorKind::UnitViolation, "unit law fails at basis element " + std::to_string(i));
  }
}

void validate_associative(const Algebra& a) {
  std::size_t n = a.dim();
  Scalar p = a.p();
  std::vector<std::uint64_t> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = a.basis_product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        // (e_i e_j) e_l
        for (std::size_t k = 0; k < n; ++k) {
          if (!ij[k]) continue;
          const Vec& kl = a.basis_product(k, l);
          for (std::size_t m = 0; m < n; ++m)
            if (kl[m]) lhs[m] = (lhs[m] + std::uint64_t(ij[k]) * kl[m]) % p;
        }
        // e_i (e_j e_l)
        const Vec& jl = a.basis_product(j, l);
        for (std::size_t k = 0; k < n; ++k) {
          if (!jl[k]) continue;
          const Vec& ik = a.basis_product(i, k);
          for (std::size_t m = 0; m < n; ++m)
            if (ik[m]) rhs[m] = (rhs[m] + std::uint64_t(jl[k]) * ik[m]) % p;
        }
        if (lhs != rhs)
          throw Error(ErrorKind::AssociativityViolation, "(e" + std::to_string(i) + " e" + std::to_string(j) +
                                                             ") e" + std::to_string(l) + " differs");
      }
    }
}

Algebra field_algebra(PrimeField field) { return Algebra::make(field, 1, {1}, {1}); }

Algebra opposite(const Algebra& a) {
  std::size_t n = a.dim();
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.c(j, i, k);
  return Algebra::make(a.field(), n, std::move(c), a.unit());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (a.p() != b.p()) throw Error(ErrorKind::Usage, "tensor_algebra: field mismatch");
  std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  auto f = a.field();
  std::vector<Scalar> c(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      const Vec& ik = a.basis_product(i, k);
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          const Vec& jl = b.basis_product(j, l);
          std::size_t row = ((i * nb + j) * n + (k * nb + l)) * n;
          for (std::size_t m = 0; m < na; ++m) {
            if (!ik[m]) continue;
            for (std::size_t q = 0; q < nb; ++q)
              if (jl[q]) c[row + m * nb + q] = f.mul(ik[m], jl[q]);
          }
        }
    }
  Vec unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = f.mul(a.unit()[i], b.unit()[j]);
  return Algebra::make(f, n, std::move(c), std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (a.p() != b.p()) throw Error(ErrorKind::Usage, "direct_product: field mismatch");
  std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<Scalar> c(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[((na + i) * n + na + j) * n + na + k] = b.c(i, j, k);
  Vec unit(n);
  for (std::size_t i = 0; i < na; ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < nb; ++i) unit[na + i] = b.unit()[i];
  return Algebra::make(a.field(), n, std::move(c), std::move(unit));
}

void validate_group(const std::vector<std::vector<std::size_t>>& t) {
  std::size_t n = t.size();
  auto fail = [](const std::string& m) { throw Error(ErrorKind::NotAGroup, m); };
  if (n == 0) fail("empty table");
  for (auto& row : t) {
    if (row.size() != n) fail("table is not square");
    for (auto x : row)
      if (x >= n) fail("entry out of range");
  }
  std::size_t e = n;
  for (std::size_t g = 0; g < n && e == n; ++g) {
    bool ok = true;
    for (std::size_t h = 0; h < n; ++h) ok = ok && t[g][h] == h && t[h][g] == h;
    if (ok) e = g;
  }
  if (e == n) fail("no identity element");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inv = false;
    for (std::size_t h = 0; h < n; ++h) has_inv = has_inv || (t[g][h] == e && t[h][g] == e);
    if (!has_inv) fail("element " + std::to_string(g) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")");
}

Algebra group_algebra(PrimeField field, const std::vector<std::vector<std::size_t>>& t) {
  validate_group(t);
  std::size_t n = t.size();
  std::vector<Scalar> c(n * n * n, 0);
  std::size_t e = 0;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) c[(g * n + h) * n + t[g][h]] = 1;
  while (t[e][0] != 0 || t[0][e] != 0) ++e;
  return Algebra::make(field, n, std::move(c), unit_vec(n, e));
}

Algebra truncated_polynomial(PrimeField field, std::size_t n) {
  std::vector<Scalar> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[(i * n + j) * n + i + j] = 1;
  return Algebra::make(field, n, std::move(c), unit_vec(n, 0));
}

Algebra matrix_algebra(PrimeField field, std::size_t n) {
  std::size_t d = n * n;
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[((i * n + j) * d + (j * n + l)) * d + i * n + l] = 1;
  Vec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return Algebra::make(field, d, std::move(c), std::move(unit));
}

Algebra upper_triangular(PrimeField field, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  std::size_t d = idx.size();
  auto pos = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < d; ++k)
      if (idx[k] == std::pair{i, j}) return k;
    return d;
  };
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (idx[a].second == idx[b].first) c[(a * d + b) * d + pos(idx[a].first, idx[b].second)] = 1;
  Vec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[pos(i, i)] = 1;
  return Algebra::make(field, d, std::move(c), std::move(unit));
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<std::vector<std::size_t>> symmetric_group_s3_table() {
  // Permutations of {0,1,2} in lexicographic order; product (gh)(x) = g(h(x)).
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<int, 3> gh{};
      for (int x = 0; x < 3; ++x) gh[x] = perms[g][perms[h][x]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == gh) t[g][h] = k;
    }
  return t;
}

Enveloping enveloping(const Algebra& r, const Algebra& s) {
  if (r.p() != s.p()) throw Error(ErrorKind::Usage, "enveloping: field mismatch");
  Algebra env = tensor_algebra(r, opposite(s));
  std::size_t nr = r.dim(), ns = s.dim();
  Mat le(env.dim(), nr, r.p()), re(env.dim(), ns, r.p());
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      le(i * ns + j, i) = s.unit()[j];
      re(i * ns + j, j) = r.unit()[i];
    }
  return {env, le, re};
}

AlgebraHom AlgebraHom::make(const Algebra& source, const Algebra& target, Mat m) {
  if (source.p() != target.p()) throw Error(ErrorKind::Usage, "make_hom: field mismatch");
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw Error(ErrorKind::Usage, "make_hom: matrix must be dim(target) x dim(source)");
  if (m * source.unit() != target.unit()) throw Error(ErrorKind::NotUnital, "image of 1 is not 1");
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      if (m * source.basis_product(i, j) != target.mul(m.col(i), m.col(j)))
        throw Error(ErrorKind::NotMultiplicative,
                    "phi(e" + std::to_string(i) + " e" + std::to_string(j) + ") != phi(e" + std::to_string(i) +
                        ") phi(e" + std::to_string(j) + ")");
  return AlgebraHom(source, target, std::move(m));
}

AlgebraHom identity_hom(const Algebra& a) { return AlgebraHom::make(a, a, Mat::identity(a.dim(), a.p())); }

AlgebraHom unit_embedding(const Algebra& target) {
  return AlgebraHom::make(field_algebra(target.field()), target, Mat::column(target.unit(), target.p()));
}

AlgebraHom compose(const AlgebraHom& alpha, const AlgebraHom& beta) {
  if (!(alpha.target() == beta.source())) throw Error(ErrorKind::Usage, "compose: homs are not composable");
  return AlgebraHom::make(alpha.source(), beta.target(), beta.matrix() * alpha.matrix());
}

}  // namespace qfw
