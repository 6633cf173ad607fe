#include "qfw/ringext.hpp"

#include "qfw/anchors.hpp"

namespace qfw {

Extension make_extension(const AlgebraHom& hom) {
  const Algebra& r = hom.source();
  const Algebra& s = hom.target();
  std::vector<Mat> through, left_reg, right_reg, right_through;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Vec img = hom(r.basis(i));
    through.push_back(s.left_mult(img));
    right_through.push_back(s.right_mult(img));
  }
  for (std::size_t j = 0; j < s.dim(); ++j) {
    left_reg.push_back(s.left_mult_basis(j));
    right_reg.push_back(s.right_mult_basis(j));
  }
  auto rs = Bimodule::make(r, s, std::move(through), right_reg);
  auto sr = Bimodule::make(s, r, left_reg, std::move(right_through));
  return {hom, std::move(rs), std::move(sr)};
}

Extension compose(const Extension& alpha, const Extension& beta) {
  return make_extension(compose(alpha.hom, beta.hom));
}

Report is_qf_extension(const Extension& e, Rng& rng) {
  Report r;
  Report primary = is_qf_bimodule(e.rs, rng);
  Report cross = is_qf_bimodule(e.sr, rng);
  r.absorb(primary, "_R S_S: ");
  r.absorb(cross, "_S S_R: ");
  r.add({"condition (ii)", anchors::kQfExtension, primary.verdict, nullptr,
         primary.verdict == Verdict::Yes ? "" : "_R S_S is not a quasi-Frobenius bimodule"});
  r.add({"condition (ii')", anchors::kQfExtensionPrime, cross.verdict, nullptr,
         cross.verdict == Verdict::Yes ? "" : "_S S_R is not a quasi-Frobenius bimodule"});
  if (primary.verdict != cross.verdict) {
    r.verdict = Verdict::Inconsistent;
    r.notes.push_back("conditions (ii) and (ii') disagree");
  } else {
    r.verdict = primary.verdict;
    if (r.verdict == Verdict::No && r.checks[0].verdict == Verdict::No) r.notes.push_back("_R S not projective");
  }
  return r;
}

Report is_frobenius_extension(const Extension& e, Rng& rng) {
  Report r;
  r.add(projectivity_check(restrict_bimodule(e.rs, Side::Left), "_R S projective", anchors::kFrobExtension));
  auto dual = left_dual(e.rs).module;
  Check c{"S isomorphic to Hom_R(S, R) as (S,R)-bimodules", anchors::kFrobExtension, Verdict::Yes, nullptr, ""};
  if (auto f = iso(e.sr, dual, rng)) {
    c.certificate = isomorphism_certificate(*f, e.sr.full_rep(), dual.full_rep());
  } else {
    c.verdict = Verdict::No;
    c.reason = "no bimodule isomorphism";
  }
  r.add(std::move(c));
  r.verdict = Report::all_yes({r.checks[0].verdict, r.checks[1].verdict});
  return r;
}

Report compose_check(const Extension& alpha, const Extension& beta, Rng& rng) {
  if (!(alpha.hom.target() == beta.hom.source())) throw Error(ErrorKind::Usage, "extensions are not composable");
  Report r;
  Report rb = is_qf_extension(beta, rng);
  r.absorb(rb, "beta: ");
  r.add({"beta quasi-Frobenius", anchors::kCompose, rb.verdict, nullptr, ""});
  if (rb.verdict != Verdict::Yes) {
    r.verdict = rb.verdict == Verdict::Inconsistent ? Verdict::Inconsistent : Verdict::Vacuous;
    r.notes.push_back("hypothesis fails: beta is not quasi-Frobenius");
    return r;
  }
  Report ra = is_qf_extension(alpha, rng);
  Report rc = is_qf_extension(compose(alpha, beta), rng);
  r.absorb(ra, "alpha: ");
  r.absorb(rc, "beta o alpha: ");
  r.add({"alpha quasi-Frobenius", anchors::kCompose, ra.verdict, nullptr, ""});
  r.add({"beta o alpha quasi-Frobenius", anchors::kCompose, rc.verdict, nullptr, ""});
  bool agree = ra.verdict == rc.verdict && ra.verdict != Verdict::Inconsistent;
  r.add({"equivalence holds", anchors::kCompose, agree ? Verdict::Yes : Verdict::Inconsistent, nullptr,
         agree ? "" : "alpha and beta o alpha verdicts differ"});
  r.verdict = agree ? Verdict::Yes : Verdict::Inconsistent;
  return r;
}

PairWitness qf_pair_witness(const Extension& e, const LeftModule& x, Rng& rng) {
  const Algebra& r = e.hom.source();
  const Algebra& s = e.hom.target();
  if (!(x.algebra() == s)) throw Error(ErrorKind::Usage, "qf_pair_witness: X must be a module over the target");
  Scalar p = s.p();
  auto w = is_fg_projective(restrict_bimodule(e.rs, Side::Left));
  if (!w) throw Error(ErrorKind::Usage, "qf_pair_witness: _R S is not projective");
  DualModule d = left_dual(e.rs);
  auto cert = divides(d.module, e.sr, rng);
  if (!cert) throw Error(ErrorKind::Usage, "qf_pair_witness: Hom_R(S,R) does not divide S");
  std::size_t ds = s.dim(), dr = r.dim(), dx = x.dim(), n = cert->n;

  // X restricted to R, as an (R, k)-bimodule.
  std::vector<Mat> rx;
  for (std::size_t i = 0; i < dr; ++i) rx.push_back(x.act(e.hom(r.basis(i))));
  auto k = field_algebra(s.field());
  auto x_r = make_bimodule_unchecked(r, k, dx, rx, {Mat::identity(dx, p)});
  auto sn = power(e.sr, n);
  auto t = tensor_over(r, sn, x_r);

  // Dual basis of _R S: s = sum_j sigma_j(s) e_j with sigma_j in Hom_R(S, R).
  std::vector<Vec> phi_f;
  for (std::size_t j = 0; j < ds; ++j) {
    Mat sigma_j = w->sigma.block(j * dr, 0, dr, ds);
    phi_f.push_back(cert->phi * d.maps.coordinates(sigma_j));
  }
  std::size_t raw = sn.dim() * dx;
  Mat alpha_raw(raw, dx, p);
  for (std::size_t c = 0; c < dx; ++c) {
    Vec col(raw, 0);
    Vec xc = unit_vec(dx, c);
    for (std::size_t j = 0; j < ds; ++j) {
      Vec ejx = x.action(j) * xc;
      for (std::size_t a = 0; a < sn.dim(); ++a) {
        if (!phi_f[j][a]) continue;
        for (std::size_t b = 0; b < dx; ++b)
          col[a * dx + b] = (col[a * dx + b] + phi_f[j][a] * ejx[b]) % p;
      }
    }
    alpha_raw.set_col(c, col);
  }
  Mat alpha = t.projection * alpha_raw;

  // alphabar on raw e_a (x) y: evaluate psi'(e_a) at 1, act on y through phi.
  Mat bar_raw(dx, raw, p);
  for (std::size_t a = 0; a < sn.dim(); ++a) {
    Mat f = d.maps.combine(cert->psi.col(a));
    Vec at_one = f * s.unit();
    Mat act = x.act(e.hom(at_one));
    for (std::size_t b = 0; b < dx; ++b) bar_raw.set_col(a * dx + b, act.col(b));
  }
  // The raw map must vanish on the tensor relations to descend.
  if (!(bar_raw * t.section * t.projection == bar_raw))
    throw Error(ErrorKind::Internal, "alphabar does not descend to the tensor product");
  Mat alphabar = bar_raw * t.section;
  bool ok = (alphabar * alpha).is_identity();
  return {n, std::move(alpha), std::move(alphabar), ok};
}

json witness_certificate(const PairWitness& w, Scalar p) {
  json j;
  j["kind"] = "witness";
  j["p"] = p;
  j["n"] = w.n;
  j["alpha"] = mat_to_json(w.alpha);
  j["alphabar"] = mat_to_json(w.alphabar);
  return j;
}

}  // namespace qfw
