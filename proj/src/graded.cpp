#include "qfw/graded.hpp"

#include <numeric>
#include <optional>

#include "qfw/anchors.hpp"

namespace qfw {

namespace {

Mat sub(const Mat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Mat out(rows.size(), cols.size(), m.modulus());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  std::partial_sum(dims.begin(), dims.end(), off.begin() + 1);
  return off;
}

std::vector<std::vector<std::size_t>> ranges(const std::vector<std::size_t>& dims) {
  auto off = offsets(dims);
  std::vector<std::vector<std::size_t>> out(dims.size());
  for (std::size_t x = 0; x < dims.size(); ++x)
    for (std::size_t i = off[x]; i < off[x + 1]; ++i) out[x].push_back(i);
  return out;
}

std::vector<std::size_t> degrees(const GradedRing& r) {
  std::vector<std::size_t> deg(r.total().dim());
  for (std::size_t x = 0; x < r.order(); ++x)
    for (auto i : r.component(x)) deg[i] = x;
  return deg;
}

Vec embed(const GradedRing& r, std::size_t j) { return r.base_embedding().matrix().col(j); }

// Components of Coind(N) as Hom spaces together with the graded module.
struct CoindData {
  std::vector<HomSpace> homs;
  GradedModule module;
};

CoindData coinduce_data(const GradedRing& r, const LeftModule& n) {
  const Algebra& tot = r.total();
  Scalar p = tot.p();
  std::size_t g = r.order();
  Rep target = n.rep();
  std::vector<HomSpace> homs(g);
  std::vector<std::size_t> dims(g);
  for (std::size_t y = 0; y < g; ++y) {
    const auto& c = r.component(r.inverse(y));
    Rep src{p, c.size(), {}};
    for (auto gen : r.base().generators()) src.ops.push_back(sub(tot.left_mult(embed(r, gen)), c, c));
    homs[y] = hom_space(src, target);
    dims[y] = homs[y].dim();
  }
  auto off = offsets(dims);
  auto deg = degrees(r);
  std::vector<Mat> act;
  for (std::size_t i = 0; i < tot.dim(); ++i) {
    Mat a(off[g], off[g], p);
    std::size_t x = deg[i];
    Mat right = tot.right_mult_basis(i);
    for (std::size_t y = 0; y < g; ++y) {
      std::size_t xy = r.mul(x, y);
      if (dims[y] == 0 || dims[xy] == 0) continue;
      Mat rr = sub(right, r.component(r.inverse(y)), r.component(r.inverse(xy)));
      for (std::size_t k = 0; k < dims[y]; ++k) {
        Vec v = homs[xy].coordinates(homs[y].basis[k] * rr);
        for (std::size_t l = 0; l < v.size(); ++l) a(off[xy] + l, off[y] + k) = v[l];
      }
    }
    act.push_back(std::move(a));
  }
  auto total = LeftModule::make(tot, off[g], std::move(act));
  return {std::move(homs), GradedModule::make(r, std::move(total), ranges(dims))};
}

struct IndData {
  std::vector<std::optional<TensorProduct>> tensors;  // empty for zero components
  std::vector<std::size_t> dims;
};

IndData induce_data(const GradedRing& r, const LeftModule& n) {
  const Algebra& tot = r.total();
  const Algebra& base = r.base();
  Scalar p = tot.p();
  auto k = field_algebra(tot.field());
  auto nb = Bimodule::make(base, k, n.actions(), {Mat::identity(n.dim(), p)});
  IndData d;
  for (std::size_t y = 0; y < r.order(); ++y) {
    const auto& c = r.component(y);
    if (c.empty()) {
      d.tensors.emplace_back(std::nullopt);
      d.dims.push_back(0);
      continue;
    }
    std::vector<Mat> ra;
    for (std::size_t j = 0; j < base.dim(); ++j) ra.push_back(sub(tot.right_mult(embed(r, j)), c, c));
    auto ry = Bimodule::make(k, base, {Mat::identity(c.size(), p)}, std::move(ra));
    d.tensors.push_back(tensor_over(base, ry, nb));
    d.dims.push_back(d.tensors.back()->module.dim());
  }
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------

GradedRing GradedRing::make(PrimeField field, GroupTable group, std::vector<std::size_t> dims,
                            std::vector<Mat> products) {
  validate_group(group);
  std::size_t g = group.size();
  std::size_t e = g;
  for (std::size_t x = 0; x < g && e == g; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < g; ++y) ok = ok && group[x][y] == y && group[y][x] == y;
    if (ok) e = x;
  }
  if (dims.size() != g) throw Error(ErrorKind::Usage, "one component dimension per group element is required");
  if (products.size() != g * g) throw Error(ErrorKind::Usage, "products must have |G|^2 entries");
  auto off = offsets(dims);
  std::size_t d = off[g];
  if (d == 0) throw Error(ErrorKind::Usage, "graded ring of dimension 0");
  Scalar p = field.p();
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y) {
      std::size_t xy = group[x][y];
      const Mat& m = products[x * g + y];
      if (m.rows() != dims[xy] || m.cols() != dims[x] * dims[y])
        throw Error(ErrorKind::Usage, "product (" + std::to_string(x) + "," + std::to_string(y) +
                                          ") must be " + std::to_string(dims[xy]) + "x" +
                                          std::to_string(dims[x] * dims[y]));
      if (m.modulus() != p) throw Error(ErrorKind::Usage, "product over the wrong field");
      for (std::size_t a = 0; a < dims[x]; ++a)
        for (std::size_t b = 0; b < dims[y]; ++b)
          for (std::size_t k = 0; k < dims[xy]; ++k)
            c[((off[x] + a) * d + off[y] + b) * d + off[xy] + k] = m(k, a * dims[y] + b);
    }
  // u e_j = e_j and e_j u = e_j, linear in u.
  Mat sys(2 * d * d, d, p), rhs(2 * d * d, 1, p);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        sys((j * d + k), i) = c[(i * d + j) * d + k];
        sys(d * d + j * d + k, i) = c[(j * d + i) * d + k];
      }
      if (j == k) rhs(j * d + k, 0) = rhs(d * d + j * d + k, 0) = 1;
    }
  auto sol = solve_right(sys, rhs);
  if (!sol) throw Error(ErrorKind::UnitViolation, "the graded product has no two-sided unit");
  Vec u = sol->col(0);
  for (std::size_t x = 0; x < g; ++x)
    if (x != e)
      for (std::size_t i = off[x]; i < off[x + 1]; ++i)
        if (u[i]) throw Error(ErrorKind::GradingViolation, "unit does not lie in R_e");
  auto total = Algebra::make(field, d, std::move(c), u);

  std::size_t de = dims[e];
  const Mat& pe = products[e * g + e];
  std::vector<Scalar> ce(de * de * de);
  for (std::size_t a = 0; a < de; ++a)
    for (std::size_t b = 0; b < de; ++b)
      for (std::size_t k = 0; k < de; ++k) ce[(a * de + b) * de + k] = pe(k, a * de + b);
  auto base = Algebra::make(field, de, std::move(ce), Vec(u.begin() + off[e], u.begin() + off[e + 1]));
  Mat emb(d, de, p);
  for (std::size_t a = 0; a < de; ++a) emb(off[e] + a, a) = 1;
  auto hom = AlgebraHom::make(base, total, std::move(emb));
  return GradedRing(std::move(group), e, std::move(total), std::move(base), std::move(hom), ranges(dims));
}

GradedRing GradedRing::from_algebra(const Algebra& r, GroupTable group, std::vector<std::size_t> degree) {
  validate_group(group);
  std::size_t g = group.size();
  if (degree.size() != r.dim()) throw Error(ErrorKind::Usage, "one degree per basis vector is required");
  std::vector<std::vector<std::size_t>> comp(g);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (degree[i] >= g) throw Error(ErrorKind::Usage, "degree outside the group");
    comp[degree[i]].push_back(i);
  }
  std::vector<std::size_t> dims(g);
  for (std::size_t x = 0; x < g; ++x) dims[x] = comp[x].size();
  std::vector<Mat> products;
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y) {
      std::size_t xy = group[x][y];
      Mat m(dims[xy], dims[x] * dims[y], r.p());
      for (std::size_t a = 0; a < dims[x]; ++a)
        for (std::size_t b = 0; b < dims[y]; ++b) {
          Vec v = r.basis_product(comp[x][a], comp[y][b]);
          for (std::size_t k = 0; k < r.dim(); ++k)
            if (v[k] && degree[k] != xy)
              throw Error(ErrorKind::GradingViolation, "e" + std::to_string(comp[x][a]) + " e" +
                                                           std::to_string(comp[y][b]) + " leaves its component");
          for (std::size_t k = 0; k < dims[xy]; ++k) m(k, a * dims[y] + b) = v[comp[xy][k]];
        }
      products.push_back(std::move(m));
    }
  return make(r.field(), std::move(group), std::move(dims), std::move(products));
}

std::size_t GradedRing::inverse(std::size_t x) const {
  for (std::size_t y = 0; y < order(); ++y)
    if (group_[x][y] == e_) return y;
  throw Error(ErrorKind::Internal, "element without inverse");
}

LeftModule GradedRing::component_module(std::size_t x) const {
  const auto& c = comp_[x];
  std::vector<Mat> act;
  for (std::size_t j = 0; j < base_.dim(); ++j)
    act.push_back(sub(total_.left_mult(base_embedding_.matrix().col(j)), c, c));
  return LeftModule::make(base_, c.size(), std::move(act));
}

GradedModule GradedModule::make(const GradedRing& r, LeftModule total,
                                std::vector<std::vector<std::size_t>> components) {
  if (!(total.algebra() == r.total())) throw Error(ErrorKind::Usage, "graded module over a different ring");
  std::size_t g = r.order();
  if (components.size() != g) throw Error(ErrorKind::Usage, "one component per group element is required");
  std::vector<std::size_t> owner(total.dim(), g);
  for (std::size_t y = 0; y < g; ++y)
    for (auto i : components[y]) {
      if (i >= total.dim() || owner[i] != g)
        throw Error(ErrorKind::GradingViolation, "components do not partition the basis");
      owner[i] = y;
    }
  for (auto o : owner)
    if (o == g) throw Error(ErrorKind::GradingViolation, "components do not partition the basis");
  for (std::size_t x = 0; x < g; ++x)
    for (auto i : r.component(x)) {
      const Mat& a = total.action(i);
      for (std::size_t col = 0; col < total.dim(); ++col) {
        std::size_t target = r.mul(x, owner[col]);
        for (std::size_t row = 0; row < total.dim(); ++row)
          if (a(row, col) && owner[row] != target)
            throw Error(ErrorKind::GradingViolation,
                        "R_" + std::to_string(x) + " M_" + std::to_string(owner[col]) + " leaves M_" +
                            std::to_string(target));
      }
    }
  return {std::move(total), std::move(components)};
}

GradedModule regular_graded(const GradedRing& r) {
  std::vector<std::vector<std::size_t>> comp;
  for (std::size_t x = 0; x < r.order(); ++x) comp.push_back(r.component(x));
  return GradedModule::make(r, regular_left(r.total()), std::move(comp));
}

LeftModule restrict_e(const GradedRing& r, const GradedModule& m) {
  const auto& c = m.components[r.identity()];
  std::vector<Mat> act;
  for (std::size_t j = 0; j < r.base().dim(); ++j) act.push_back(sub(m.total.act(embed(r, j)), c, c));
  return LeftModule::make(r.base(), c.size(), std::move(act));
}

GradedModule induce(const GradedRing& r, const LeftModule& n) {
  if (!(n.algebra() == r.base())) throw Error(ErrorKind::Usage, "induce: module is not over R_e");
  const Algebra& tot = r.total();
  Scalar p = tot.p();
  auto d = induce_data(r, n);
  auto off = offsets(d.dims);
  auto deg = degrees(r);
  std::size_t g = r.order();
  Mat idn = Mat::identity(n.dim(), p);
  std::vector<Mat> act;
  for (std::size_t i = 0; i < tot.dim(); ++i) {
    Mat a(off[g], off[g], p);
    Mat left = tot.left_mult_basis(i);
    for (std::size_t y = 0; y < g; ++y) {
      std::size_t xy = r.mul(deg[i], y);
      if (d.dims[y] == 0 || d.dims[xy] == 0) continue;
      Mat l = sub(left, r.component(xy), r.component(y));
      a.set_block(off[xy], off[y], d.tensors[xy]->projection * kron(l, idn) * d.tensors[y]->section);
    }
    act.push_back(std::move(a));
  }
  return GradedModule::make(r, LeftModule::make(tot, off[g], std::move(act)), ranges(d.dims));
}

GradedModule coinduce(const GradedRing& r, const LeftModule& n) {
  if (!(n.algebra() == r.base())) throw Error(ErrorKind::Usage, "coinduce: module is not over R_e");
  return coinduce_data(r, n).module;
}

GradedModule suspend(const GradedRing& r, const GradedModule& m, std::size_t x) {
  if (x >= r.order()) throw Error(ErrorKind::Usage, "suspend: element outside the group");
  std::vector<std::vector<std::size_t>> comp(r.order());
  for (std::size_t y = 0; y < r.order(); ++y) comp[y] = m.components[r.mul(y, x)];
  return GradedModule::make(r, m.total, std::move(comp));
}

Mat induction_unit(const GradedRing& r, const LeftModule& n) {
  auto d = induce_data(r, n);
  const auto& t = *d.tensors[r.identity()];
  Scalar p = r.total().p();
  Mat out(t.module.dim(), n.dim(), p);
  const Vec& u = r.base().unit();
  for (std::size_t k = 0; k < n.dim(); ++k) {
    Vec raw(u.size() * n.dim(), 0);
    for (std::size_t a = 0; a < u.size(); ++a) raw[a * n.dim() + k] = u[a];
    out.set_col(k, t.projection * raw);
  }
  return out;
}

Mat coinduction_counit(const GradedRing& r, const LeftModule& n) {
  auto d = coinduce_data(r, n);
  const auto& h = d.homs[r.identity()];
  Mat out(n.dim(), h.dim(), r.total().p());
  for (std::size_t k = 0; k < h.dim(); ++k) out.set_col(k, h.basis[k] * r.base().unit());
  return out;
}

bool is_module_iso(const Mat& f, const LeftModule& source, const LeftModule& target) {
  if (f.rows() != target.dim() || f.cols() != source.dim() || !invert(f)) return false;
  for (std::size_t i = 0; i < source.algebra().dim(); ++i)
    if (f * source.action(i) != target.action(i) * f) return false;
  return true;
}

Bimodule graded_ring_bimodule(const GradedRing& r) {
  const Algebra& tot = r.total();
  std::vector<Mat> la, ra;
  for (std::size_t i = 0; i < tot.dim(); ++i) la.push_back(tot.left_mult_basis(i));
  for (std::size_t j = 0; j < r.base().dim(); ++j) ra.push_back(tot.right_mult(embed(r, j)));
  return Bimodule::make(tot, r.base(), std::move(la), std::move(ra));
}

Bimodule coinduced_base_bimodule(const GradedRing& r) {
  const Algebra& base = r.base();
  auto d = coinduce_data(r, regular_left(base));
  std::size_t dim = d.module.total.dim();
  std::vector<Mat> ra;
  for (std::size_t j = 0; j < base.dim(); ++j) {
    Mat a(dim, dim, base.p());
    Mat rm = base.right_mult_basis(j);
    for (std::size_t y = 0; y < r.order(); ++y) {
      const auto& idx = d.module.components[y];
      for (std::size_t k = 0; k < idx.size(); ++k) {
        Vec v = d.homs[y].coordinates(rm * d.homs[y].basis[k]);
        for (std::size_t l = 0; l < v.size(); ++l) a(idx[l], idx[k]) = v[l];
      }
    }
    ra.push_back(std::move(a));
  }
  return Bimodule::make(r.total(), base, d.module.total.actions(), std::move(ra));
}

Report is_qf_restriction(const GradedRing& r, Rng& rng) {
  Report rep;
  std::vector<Verdict> vs;
  for (std::size_t x = 0; x < r.order(); ++x) {
    std::string name = "R_" + std::to_string(x) + " projective over R_e";
    Check c = r.component(x).empty() ? Check{name, anchors::kGraded, Verdict::Yes, nullptr, ""}
                                     : projectivity_check(r.component_module(x), name, anchors::kGraded);
    vs.push_back(c.verdict);
    rep.add(std::move(c));
  }
  Check s = similarity_check(graded_ring_bimodule(r), coinduced_base_bimodule(r), rng,
                             "R similar to Coind(R_e) as (R,R_e)-bimodules", anchors::kGraded);
  vs.push_back(s.verdict);
  rep.add(std::move(s));
  rep.verdict = Report::all_yes(vs);
  rep.notes.push_back("condition (ii) is certified through condition (iii)");
  return rep;
}

}  // namespace qfw
