#include "qfw/simdiv.hpp"

#include "qfw/anchors.hpp"

namespace qfw {

namespace {

bool same_rep(const Rep& a, const Rep& b) { return a.dim == b.dim && a.ops == b.ops; }

Mat slot_injection(std::size_t d, std::size_t n, std::size_t slot, Scalar p) {
  Mat m(d * n, d, p);
  m.set_block(slot * d, 0, Mat::identity(d, p));
  return m;
}

Mat slot_projection(std::size_t d, std::size_t n, std::size_t slot, Scalar p) {
  Mat m(d, d * n, p);
  m.set_block(0, slot * d, Mat::identity(d, p));
  return m;
}

json cert_core(const Rep& m_full, const Rep& n_full) {
  json j;
  j["p"] = m_full.p;
  j["source_actions"] = mats_to_json(m_full.ops);
  j["target_actions"] = mats_to_json(n_full.ops);
  return j;
}

}  // namespace

std::optional<DividesCert> divides(const Rep& m, const Rep& n, Rng& rng) {
  Scalar p = m.p;
  if (m.ops.size() != n.ops.size()) throw Error(ErrorKind::Usage, "divides: different algebras");
  if (same_rep(m, n)) return DividesCert{1, Mat::identity(m.dim, p), Mat::identity(m.dim, p)};
  if (m.dim == 0) return DividesCert{1, Mat(n.dim, 0, p), Mat(0, n.dim, p)};
  if (n.dim == 0) return std::nullopt;
  auto dm = decompose(m, rng);
  auto dn = decompose(n, rng);
  struct Match {
    std::size_t target;
    Mat theta;
  };
  std::vector<Match> matches;
  std::size_t copies = 1;
  for (auto& sm : dm.summands) {
    std::optional<Match> found;
    for (std::size_t j = 0; j < dn.summands.size() && !found; ++j)
      if (auto th = iso_indecomposable(sm.module, dn.summands[j].module)) found = Match{j, *th};
    if (!found) return std::nullopt;
    std::size_t b = dn.summands[found->target].multiplicity;
    copies = std::max(copies, (sm.multiplicity + b - 1) / b);
    matches.push_back(std::move(*found));
  }
  Mat phi(n.dim * copies, m.dim, p), psi(m.dim, n.dim * copies, p);
  for (std::size_t c = 0; c < dm.summands.size(); ++c) {
    const Summand& sm = dm.summands[c];
    const Summand& sn = dn.summands[matches[c].target];
    Mat theta_inv = *invert(matches[c].theta);
    std::size_t b = sn.multiplicity;
    for (std::size_t k = 0; k < sm.multiplicity; ++k) {
      std::size_t slot = k / b, t = k % b;
      phi = phi + slot_injection(n.dim, copies, slot, p) * sn.injections[t] * matches[c].theta * sm.projections[k];
      psi = psi + sm.injections[k] * theta_inv * sn.projections[t] * slot_projection(n.dim, copies, slot, p);
    }
  }
  DividesCert cert{copies, std::move(phi), std::move(psi)};
  auto chk = verify_cert(cert, m, n);
  if (!chk.ok) throw Error(ErrorKind::Internal, "assembled divisibility certificate failed: " + chk.reasons[0]);
  return cert;
}

std::optional<DividesCert> divides(const Bimodule& m, const Bimodule& n, Rng& rng) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw Error(ErrorKind::Usage, "divides: algebra pairs differ");
  return divides(m.rep(), n.rep(), rng);
}

std::optional<DividesCert> divides(const LeftModule& m, const LeftModule& n, Rng& rng) {
  if (!(m.algebra() == n.algebra())) throw Error(ErrorKind::Usage, "divides: algebras differ");
  return divides(m.rep(), n.rep(), rng);
}

std::optional<SimilarityCert> similar(const Rep& m, const Rep& n, Rng& rng) {
  auto f = divides(m, n, rng);
  auto b = divides(n, m, rng);
  // Cross-check against equality of the class sets.
  bool classes_equal = true;
  if (m.dim && n.dim) {
    auto dm = decompose(m, rng);
    auto dn = decompose(n, rng);
    auto covered = [](const Decomposition& x, const Decomposition& y) {
      for (auto& s : x.summands) {
        bool hit = false;
        for (auto& t : y.summands) hit = hit || iso_indecomposable(s.module, t.module).has_value();
        if (!hit) return false;
      }
      return true;
    };
    classes_equal = covered(dm, dn) && covered(dn, dm);
  } else {
    classes_equal = m.dim == n.dim;
  }
  if (classes_equal != (f && b)) throw Error(ErrorKind::Internal, "similarity criteria disagree");
  if (!f || !b) return std::nullopt;
  return SimilarityCert{std::move(*f), std::move(*b)};
}

std::optional<SimilarityCert> similar(const Bimodule& m, const Bimodule& n, Rng& rng) {
  if (!(m.left_algebra() == n.left_algebra()) || !(m.right_algebra() == n.right_algebra()))
    throw Error(ErrorKind::Usage, "similar: algebra pairs differ");
  return similar(m.rep(), n.rep(), rng);
}

std::optional<SimilarityCert> similar(const LeftModule& m, const LeftModule& n, Rng& rng) {
  if (!(m.algebra() == n.algebra())) throw Error(ErrorKind::Usage, "similar: algebras differ");
  return similar(m.rep(), n.rep(), rng);
}

CertCheck verify_cert(const DividesCert& c, const Rep& m, const Rep& n) {
  CertCheck out;
  auto fail = [&](std::string r) {
    out.ok = false;
    out.reasons.push_back(std::move(r));
  };
  if (c.n == 0) fail("copy count must be positive");
  Rep nn = power(n, c.n);
  if (c.phi.rows() != nn.dim || c.phi.cols() != m.dim || c.psi.rows() != m.dim || c.psi.cols() != nn.dim) {
    fail("shape mismatch");
    return out;
  }
  if (!intertwines(c.phi, m, nn)) fail("phi is not a bimodule map");
  if (!intertwines(c.psi, nn, m)) fail("psi is not a bimodule map");
  if (!(c.psi * c.phi).is_identity()) fail("composite not identity");
  return out;
}

CertCheck verify_cert(const SimilarityCert& c, const Rep& m, const Rep& n) {
  auto a = verify_cert(c.forward, m, n);
  auto b = verify_cert(c.backward, n, m);
  for (auto& r : b.reasons) a.reasons.push_back("backward: " + r);
  a.ok = a.ok && b.ok;
  return a;
}

json divides_certificate(const DividesCert& c, const Rep& m_full, const Rep& n_full) {
  json j;
  j["kind"] = "divides";
  j.update(cert_core(m_full, n_full));
  j["n"] = c.n;
  j["phi"] = mat_to_json(c.phi);
  j["psi"] = mat_to_json(c.psi);
  return j;
}

json similarity_certificate(const SimilarityCert& c, const Rep& m_full, const Rep& n_full) {
  json j;
  j["kind"] = "similarity";
  j["forward"] = divides_certificate(c.forward, m_full, n_full);
  j["backward"] = divides_certificate(c.backward, n_full, m_full);
  return j;
}

json isomorphism_certificate(const Mat& f, const Rep& m_full, const Rep& n_full) {
  json j;
  j["kind"] = "isomorphism";
  j.update(cert_core(m_full, n_full));
  j["map"] = mat_to_json(f);
  j["inverse"] = mat_to_json(*invert(f));
  return j;
}

json projective_certificate(const SplitWitness& w, const LeftModule& m) {
  json j;
  j["kind"] = "projective";
  j["p"] = m.algebra().p();
  j["actions"] = mats_to_json(m.actions());
  std::vector<Mat> regular;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) regular.push_back(m.algebra().left_mult_basis(i));
  j["regular"] = mats_to_json(regular);
  j["rank"] = w.rank;
  j["pi"] = mat_to_json(w.pi);
  j["sigma"] = mat_to_json(w.sigma);
  return j;
}

// ---------------------------------------------------------------------------

Check projectivity_check(const LeftModule& m, const std::string& name, const std::string& anchor) {
  Check c{name, anchor, Verdict::Yes, nullptr, ""};
  if (auto w = is_fg_projective(m)) {
    c.certificate = projective_certificate(*w, m);
  } else {
    c.verdict = Verdict::No;
    c.reason = "no A-linear section of the free cover exists (module not projective)";
  }
  return c;
}

Check similarity_check(const Bimodule& m, const Bimodule& n, Rng& rng, const std::string& name,
                       const std::string& anchor) {
  Check c{name, anchor, Verdict::Yes, nullptr, ""};
  if (auto s = similar(m, n, rng)) {
    c.certificate = similarity_certificate(*s, m.full_rep(), n.full_rep());
  } else {
    c.verdict = Verdict::No;
    c.reason = "indecomposable classes differ";
  }
  return c;
}

Report is_qf_bimodule(const Bimodule& m, Rng& rng) {
  Report r;
  r.add(projectivity_check(restrict_bimodule(m, Side::Left), "left restriction projective", anchors::kQfBimodule));
  r.add(projectivity_check(restrict_bimodule(m, Side::Right), "right restriction projective", anchors::kQfBimodule));
  auto ld = left_dual(m).module;
  auto rd = right_dual(m).module;
  r.add(similarity_check(ld, rd, rng, "left dual similar to right dual", anchors::kQfBimodule));
  r.verdict = Report::all_yes({r.checks[0].verdict, r.checks[1].verdict, r.checks[2].verdict});
  if (r.checks[0].verdict == Verdict::No) r.notes.push_back("left restriction not projective");
  if (r.checks[1].verdict == Verdict::No) r.notes.push_back("right restriction not projective");
  return r;
}

Report is_frobenius_bimodule(const Bimodule& m, Rng& rng) {
  Report r;
  r.add(projectivity_check(restrict_bimodule(m, Side::Left), "left restriction projective", anchors::kFrobBimodule));
  r.add(projectivity_check(restrict_bimodule(m, Side::Right), "right restriction projective", anchors::kFrobBimodule));
  auto ld = left_dual(m).module;
  auto rd = right_dual(m).module;
  Check c{"left dual isomorphic to right dual", anchors::kFrobBimodule, Verdict::Yes, nullptr, ""};
  if (auto f = iso(ld, rd, rng)) {
    c.certificate = isomorphism_certificate(*f, ld.full_rep(), rd.full_rep());
  } else {
    c.verdict = Verdict::No;
    c.reason = "duals are not isomorphic";
  }
  r.add(std::move(c));
  r.verdict = Report::all_yes({r.checks[0].verdict, r.checks[1].verdict, r.checks[2].verdict});
  return r;
}

std::vector<DualStage> dual_sequence(const Bimodule& m, std::size_t depth) {
  std::vector<DualStage> right_side, left_side;
  Bimodule cur = m;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (!is_fg_projective(restrict_bimodule(cur, Side::Left)))
      throw Error(ErrorKind::NotProjectiveAtStage, "stage " + std::to_string(k) + " (left restriction)");
    cur = left_dual(cur).module;
    left_side.push_back({static_cast<int>(k), "left-dual", cur});
  }
  cur = m;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (!is_fg_projective(restrict_bimodule(cur, Side::Right)))
      throw Error(ErrorKind::NotProjectiveAtStage, "stage " + std::to_string(k) + " (right restriction)");
    cur = right_dual(cur).module;
    right_side.push_back({-static_cast<int>(k), "right-dual", cur});
  }
  std::vector<DualStage> out(right_side.rbegin(), right_side.rend());
  out.push_back({0, "input", m});
  out.insert(out.end(), left_side.begin(), left_side.end());
  return out;
}

Report qf_tensor_check(const Algebra& s, const Bimodule& m, const Bimodule& n, Rng& rng) {
  if (!(m.right_algebra() == s) || !(n.left_algebra() == s))
    throw Error(ErrorKind::Usage, "qf_tensor_check: middle algebras do not match");
  Report r;
  Report rm = is_qf_bimodule(m, rng);
  Report rn = is_qf_bimodule(n, rng);
  r.absorb(rm, "M: ");
  r.absorb(rn, "N: ");
  if (rm.verdict != Verdict::Yes || rn.verdict != Verdict::Yes) {
    r.verdict = Verdict::Vacuous;
    r.notes.push_back("hypothesis fails: an input is not quasi-Frobenius");
    return r;
  }
  auto t = tensor_over(s, m, n);
  Report rt = is_qf_bimodule(t.module, rng);
  r.absorb(rt, "M (x) N: ");
  r.verdict = rt.verdict == Verdict::Yes ? Verdict::Yes : Verdict::Inconsistent;
  return r;
}

}  // namespace qfw
