#include "qfw/modrep.hpp"

namespace qfw {

namespace {

std::string idx2(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void check_square_family(const std::vector<Mat>& ms, std::size_t count, std::size_t d, Scalar p, const char* what) {
  if (ms.size() != count)
    throw Error(ErrorKind::Usage, std::string(what) + ": expected " + std::to_string(count) + " action matrices");
  for (auto& m : ms)
    if (m.rows() != d || m.cols() != d || m.modulus() != p)
      throw Error(ErrorKind::Usage, std::string(what) + ": action matrix has wrong shape or field");
}

Mat combination(const std::vector<Mat>& ms, const Vec& c, std::size_t d, Scalar p) {
  Mat out(d, d, p);
  for (std::size_t i = 0; i < ms.size(); ++i) out.add_scaled(ms[i], c[i]);
  return out;
}

// rho(e_i) rho(e_j) = sum_k c_ijk rho(e_k), with `anti` swapping the left side
// to rho(e_j) rho(e_i) (right actions).
void validate_action(const Algebra& a, const std::vector<Mat>& rho, std::size_t d, bool anti, const char* what) {
  Scalar p = a.p();
  if (!combination(rho, a.unit(), d, p).is_identity())
    throw Error(ErrorKind::ModuleLaw, std::string(what) + ": unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = anti ? rho[j] * rho[i] : rho[i] * rho[j];
      if (lhs != combination(rho, a.basis_product(i, j), d, p))
        throw Error(ErrorKind::ModuleLaw, std::string(what) + ": action not multiplicative at " + idx2(i, j));
    }
}

std::vector<Mat> pick(const std::vector<Mat>& all, const std::vector<std::size_t>& idx) {
  std::vector<Mat> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Mat HomSpace::combine(const Vec& c) const {
  Mat out(target_dim, source_dim, p);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_scaled(basis[i], c[i]);
  return out;
}

HomSpace hom_space(const Rep& src, const Rep& tgt) {
  if (src.ops.size() != tgt.ops.size() || src.p != tgt.p)
    throw Error(ErrorKind::Usage, "hom_space: representations of different algebras");
  std::size_t m = src.dim, n = tgt.dim, big = m * n;
  Scalar p = src.p;
  HomSpace h;
  h.p = p;
  h.source_dim = m;
  h.target_dim = n;
  if (big == 0) {
    h.coords = Coordinates({}, 0, p);
    return h;
  }
  // Shrink the solution space one operator at a time.
  Mat z = Mat::identity(big, p);
  for (std::size_t k = 0; k < src.ops.size() && z.cols() > 0; ++k) {
    Mat c(big, z.cols(), p);
    for (std::size_t j = 0; j < z.cols(); ++j) {
      Mat f = unvectorize(z.col(j), n, m, p);
      c.set_col(j, vectorize(f * src.ops[k] - tgt.ops[k] * f));
    }
    auto ns = nullspace(c);
    if (ns.size() == z.cols()) continue;
    z = ns.empty() ? Mat(big, 0, p) : z * Mat::from_columns(ns, z.cols(), p);
  }
  std::vector<Vec> vecs;
  for (std::size_t j = 0; j < z.cols(); ++j) {
    vecs.push_back(z.col(j));
    h.basis.push_back(unvectorize(vecs.back(), n, m, p));
  }
  h.coords = Coordinates(vecs, big, p);
  return h;
}

bool intertwines(const Mat& f, const Rep& src, const Rep& tgt) {
  if (f.rows() != tgt.dim || f.cols() != src.dim || src.ops.size() != tgt.ops.size()) return false;
  for (std::size_t k = 0; k < src.ops.size(); ++k)
    if (f * src.ops[k] != tgt.ops[k] * f) return false;
  return true;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.ops.size() != b.ops.size()) throw Error(ErrorKind::Usage, "direct_sum: different algebras");
  Rep out{a.p, a.dim + b.dim, {}};
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    std::vector<Mat> blocks{a.ops[k], b.ops[k]};
    out.ops.push_back(block_diag(blocks));
  }
  return out;
}

Rep power(const Rep& a, std::size_t n) {
  Rep out{a.p, a.dim * n, {}};
  for (auto& op : a.ops) {
    std::vector<Mat> blocks(n, op);
    out.ops.push_back(n ? block_diag(blocks) : Mat(0, 0, a.p));
  }
  return out;
}

Rep restrict_rep(const Rep& r, const Mat& q, const Mat& b) {
  Rep out{r.p, b.cols(), {}};
  for (auto& op : r.ops) out.ops.push_back(q * op * b);
  return out;
}

// ---------------------------------------------------------------------------

LeftModule LeftModule::make(const Algebra& algebra, std::size_t dim, std::vector<Mat> action) {
  check_square_family(action, algebra.dim(), dim, algebra.p(), "module");
  validate_action(algebra, action, dim, false, "module");
  return LeftModule(algebra, dim, std::move(action));
}

LeftModule make_module_unchecked(const Algebra& algebra, std::size_t dim, std::vector<Mat> action) {
  return LeftModule(algebra, dim, std::move(action));
}

Mat LeftModule::act(const Vec& a) const { return combination(action_, a, dim_, algebra_.p()); }

Rep LeftModule::rep() const { return {algebra_.p(), dim_, pick(action_, algebra_.generators())}; }
Rep LeftModule::full_rep() const { return {algebra_.p(), dim_, action_}; }

LeftModule LeftModule::restricted(const Mat& q, const Mat& b) const {
  std::vector<Mat> act;
  for (auto& a : action_) act.push_back(q * a * b);
  return LeftModule::make(algebra_, b.cols(), std::move(act));
}

LeftModule regular_left(const Algebra& a) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.left_mult_basis(i));
  return make_module_unchecked(a, a.dim(), std::move(act));
}

LeftModule direct_sum(const LeftModule& a, const LeftModule& b) {
  if (!(a.algebra() == b.algebra())) throw Error(ErrorKind::Usage, "direct_sum: algebra mismatch");
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    std::vector<Mat> blocks{a.action(i), b.action(i)};
    act.push_back(block_diag(blocks));
  }
  return make_module_unchecked(a.algebra(), a.dim() + b.dim(), std::move(act));
}

HomSpace hom_space(const LeftModule& m, const LeftModule& n) {
  if (!(m.algebra() == n.algebra())) throw Error(ErrorKind::Usage, "hom_space: algebra mismatch");
  return hom_space(m.rep(), n.rep());
}

// ---------------------------------------------------------------------------

Bimodule Bimodule::make(const Algebra& left, const Algebra& right, std::vector<Mat> la, std::vector<Mat> ra) {
  if (left.p() != right.p()) throw Error(ErrorKind::Usage, "bimodule: field mismatch");
  std::size_t d = la.empty() ? 0 : la[0].rows();
  check_square_family(la, left.dim(), d, left.p(), "bimodule left action");
  check_square_family(ra, right.dim(), d, left.p(), "bimodule right action");
  validate_action(left, la, d, false, "bimodule left action");
  validate_action(right, ra, d, true, "bimodule right action");
  for (std::size_t i = 0; i < la.size(); ++i)
    for (std::size_t j = 0; j < ra.size(); ++j)
      if (la[i] * ra[j] != ra[j] * la[i])
        throw Error(ErrorKind::ActionsDoNotCommute, "left e" + std::to_string(i) + " and right f" + std::to_string(j));
  return Bimodule(left, right, d, std::move(la), std::move(ra));
}

Bimodule make_bimodule_unchecked(const Algebra& left, const Algebra& right, std::size_t dim, std::vector<Mat> la,
                                 std::vector<Mat> ra) {
  return Bimodule(left, right, dim, std::move(la), std::move(ra));
}

Bimodule bimodule_from_actions(const Algebra& r, const Algebra& s, std::vector<Mat> la, std::vector<Mat> ra) {
  return Bimodule::make(r, s, std::move(la), std::move(ra));
}

Mat Bimodule::left_act(const Vec& r) const { return combination(la_, r, dim_, left_.p()); }
Mat Bimodule::right_act(const Vec& s) const { return combination(ra_, s, dim_, left_.p()); }

Rep Bimodule::rep() const {
  Rep r{left_.p(), dim_, pick(la_, left_.generators())};
  for (auto& m : pick(ra_, right_.generators())) r.ops.push_back(m);
  return r;
}

Rep Bimodule::full_rep() const {
  Rep r{left_.p(), dim_, la_};
  for (auto& m : ra_) r.ops.push_back(m);
  return r;
}

Bimodule Bimodule::restricted(const Mat& q, const Mat& b) const {
  std::vector<Mat> la, ra;
  for (auto& a : la_) la.push_back(q * a * b);
  for (auto& a : ra_) ra.push_back(q * a * b);
  return Bimodule(left_, right_, b.cols(), std::move(la), std::move(ra));
}

LeftModule Bimodule::carrier() const {
  auto env = enveloping(left_, right_);
  std::size_t ns = right_.dim();
  std::vector<Mat> act(env.algebra.dim());
  for (std::size_t i = 0; i < left_.dim(); ++i)
    for (std::size_t j = 0; j < ns; ++j) act[i * ns + j] = la_[i] * ra_[j];
  return LeftModule::make(env.algebra, dim_, std::move(act));
}

Bimodule bimodule_from_carrier(const Algebra& r, const Algebra& s, const LeftModule& carrier) {
  std::size_t nr = r.dim(), ns = s.dim(), d = carrier.dim();
  if (carrier.algebra().dim() != nr * ns) throw Error(ErrorKind::Usage, "carrier is not over R (x) S^op");
  std::vector<Mat> la(nr, Mat(d, d, r.p())), ra(ns, Mat(d, d, r.p()));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      la[i].add_scaled(carrier.action(i * ns + j), s.unit()[j]);
      ra[j].add_scaled(carrier.action(i * ns + j), r.unit()[i]);
    }
  return Bimodule::make(r, s, std::move(la), std::move(ra));
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Mat> la, ra;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    la.push_back(a.left_mult_basis(i));
    ra.push_back(a.right_mult_basis(i));
  }
  return make_bimodule_unchecked(a, a, a.dim(), std::move(la), std::move(ra));
}

Bimodule as_bimodule(const LeftModule& m) {
  auto k = field_algebra(m.algebra().field());
  return make_bimodule_unchecked(m.algebra(), k, m.dim(), m.actions(), {Mat::identity(m.dim(), m.algebra().p())});
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  if (!(a.left_algebra() == b.left_algebra()) || !(a.right_algebra() == b.right_algebra()))
    throw Error(ErrorKind::Usage, "direct_sum: algebra mismatch");
  std::vector<Mat> la, ra;
  for (std::size_t i = 0; i < a.left_actions().size(); ++i) {
    std::vector<Mat> blocks{a.left_actions()[i], b.left_actions()[i]};
    la.push_back(block_diag(blocks));
  }
  for (std::size_t i = 0; i < a.right_actions().size(); ++i) {
    std::vector<Mat> blocks{a.right_actions()[i], b.right_actions()[i]};
    ra.push_back(block_diag(blocks));
  }
  return make_bimodule_unchecked(a.left_algebra(), a.right_algebra(), a.dim() + b.dim(), std::move(la),
                                 std::move(ra));
}

Bimodule power(const Bimodule& a, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Usage, "power: n must be positive");
  Bimodule out = a;
  for (std::size_t i = 1; i < n; ++i) out = direct_sum(out, a);
  return out;
}

LeftModule restrict_bimodule(const Bimodule& m, Side side) {
  if (side == Side::Left) return make_module_unchecked(m.left_algebra(), m.dim(), m.left_actions());
  return make_module_unchecked(opposite(m.right_algebra()), m.dim(), m.right_actions());
}

// ---------------------------------------------------------------------------

TensorProduct tensor_over(const Algebra& s, const Bimodule& m, const Bimodule& n) {
  if (!(m.right_algebra() == s) || !(n.left_algebra() == s))
    throw Error(ErrorKind::Usage, "tensor_over: middle algebras do not match");
  std::size_t dm = m.dim(), dn = n.dim(), raw = dm * dn;
  Scalar p = s.p();
  Mat im = Mat::identity(dm, p), in = Mat::identity(dn, p);
  std::vector<Mat> rel_blocks;
  for (auto g : s.generators()) {
    // Columns are m.s (x) n - m (x) s.n over the raw basis.
    Mat k = kron(m.right_actions()[g], in) - kron(im, n.left_actions()[g]);
    rel_blocks.push_back(k.transpose());
  }
  Mat rels = rel_blocks.empty() ? Mat(0, raw, p) : vstack(rel_blocks);
  Quotient quo(rels, raw, p);
  Mat proj = quo.projection();
  Mat sec = quo.section();
  Mat proj_t = proj.transpose();
  // q x q matrix of an operator X on the raw space: proj * X * sec, using the
  // sparsity of X restricted to representative columns.
  auto induced = [&](const Mat& x) { return ((x * sec).transpose() * proj_t).transpose(); };
  std::vector<Mat> la, ra;
  for (auto& a : m.left_actions()) la.push_back(induced(kron(a, in)));
  for (auto& b : n.right_actions()) ra.push_back(induced(kron(im, b)));
  auto bm = make_bimodule_unchecked(m.left_algebra(), n.right_algebra(), quo.dim(), std::move(la), std::move(ra));
  return {std::move(bm), std::move(proj), std::move(sec)};
}

DualModule left_dual(const Bimodule& m) {
  const Algebra& r = m.left_algebra();
  const Algebra& s = m.right_algebra();
  Scalar p = r.p();
  Rep src{p, m.dim(), pick(m.left_actions(), r.generators())};
  Rep tgt{p, r.dim(), {}};
  for (auto g : r.generators()) tgt.ops.push_back(r.left_mult_basis(g));
  HomSpace h = hom_space(src, tgt);
  std::size_t d = h.dim();
  std::vector<Mat> la(s.dim(), Mat(d, d, p)), ra(r.dim(), Mat(d, d, p));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < s.dim(); ++j) la[j].set_col(k, h.coordinates(h.basis[k] * m.right_actions()[j]));
    for (std::size_t i = 0; i < r.dim(); ++i) ra[i].set_col(k, h.coordinates(r.right_mult_basis(i) * h.basis[k]));
  }
  return {Bimodule::make(s, r, std::move(la), std::move(ra)), std::move(h)};
}

DualModule right_dual(const Bimodule& m) {
  const Algebra& r = m.left_algebra();
  const Algebra& s = m.right_algebra();
  Scalar p = r.p();
  Rep src{p, m.dim(), pick(m.right_actions(), s.generators())};
  Rep tgt{p, s.dim(), {}};
  for (auto g : s.generators()) tgt.ops.push_back(s.right_mult_basis(g));
  HomSpace h = hom_space(src, tgt);
  std::size_t d = h.dim();
  std::vector<Mat> la(s.dim(), Mat(d, d, p)), ra(r.dim(), Mat(d, d, p));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < s.dim(); ++j) la[j].set_col(k, h.coordinates(s.left_mult_basis(j) * h.basis[k]));
    for (std::size_t i = 0; i < r.dim(); ++i) ra[i].set_col(k, h.coordinates(h.basis[k] * m.left_actions()[i]));
  }
  return {Bimodule::make(s, r, std::move(la), std::move(ra)), std::move(h)};
}

// ---------------------------------------------------------------------------

Rep free_module_rep(const Algebra& a, std::size_t rank) {
  Rep out{a.p(), a.dim() * rank, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<Mat> blocks(rank, a.left_mult_basis(i));
    out.ops.push_back(rank ? block_diag(blocks) : Mat(0, 0, a.p()));
  }
  return out;
}

std::optional<SplitWitness> is_fg_projective(const LeftModule& m) {
  const Algebra& a = m.algebra();
  std::size_t n = a.dim(), d = m.dim();
  Scalar p = a.p();
  if (d == 0) return SplitWitness{0, Mat(0, 0, p), Mat(0, 0, p)};
  Rep tgt{p, n, {}};
  for (auto g : a.generators()) tgt.ops.push_back(a.left_mult_basis(g));
  HomSpace h = hom_space(m.rep(), tgt);
  // pi_j : A -> M, x -> x . m_j has column i equal to rho(e_i) m_j.
  std::vector<Mat> pj(d, Mat(d, n, p));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) pj[j].set_col(i, m.action(i).col(j));
  // Unknown sigma_j = sum_l c_{jl} h_l; require sum_j pi_j sigma_j = id.
  std::size_t unknowns = d * h.dim();
  if (unknowns == 0) return std::nullopt;
  Mat sys(d * d, unknowns, p);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < h.dim(); ++l) sys.set_col(j * h.dim() + l, vectorize(pj[j] * h.basis[l]));
  auto sol = solve_right(sys, Mat::column(vectorize(Mat::identity(d, p)), p));
  if (!sol) return std::nullopt;
  Mat pi(d, n * d, p), sigma(n * d, d, p);
  for (std::size_t j = 0; j < d; ++j) {
    pi.set_block(0, j * n, pj[j]);
    Mat sj(n, d, p);
    for (std::size_t l = 0; l < h.dim(); ++l) sj.add_scaled(h.basis[l], (*sol)(j * h.dim() + l, 0));
    sigma.set_block(j * n, 0, sj);
  }
  if (!(pi * sigma).is_identity()) throw Error(ErrorKind::Internal, "projectivity section does not split");
  return SplitWitness{d, std::move(pi), std::move(sigma)};
}

}  // namespace qfw
