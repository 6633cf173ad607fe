#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfw/decomp.hpp"
#include "qfw/report.hpp"

namespace qfw {

/// phi : M -> N^n and psi : N^n -> M with psi phi = 1.
struct DividesCert {
  std::size_t n = 0;
  Mat phi;
  Mat psi;
};

struct SimilarityCert {
  DividesCert forward;   // M | N
  DividesCert backward;  // N | M
};

/// Decided by inclusion of Krull-Schmidt classes; n is the smallest copy count.
std::optional<DividesCert> divides(const Rep& m, const Rep& n, Rng& rng);
std::optional<DividesCert> divides(const Bimodule& m, const Bimodule& n, Rng& rng);
std::optional<DividesCert> divides(const LeftModule& m, const LeftModule& n, Rng& rng);

std::optional<SimilarityCert> similar(const Rep& m, const Rep& n, Rng& rng);
std::optional<SimilarityCert> similar(const Bimodule& m, const Bimodule& n, Rng& rng);
std::optional<SimilarityCert> similar(const LeftModule& m, const LeftModule& n, Rng& rng);

struct CertCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};
/// Pure matrix re-check against the full action lists of M and N.
CertCheck verify_cert(const DividesCert& c, const Rep& m_full, const Rep& n_full);
CertCheck verify_cert(const SimilarityCert& c, const Rep& m_full, const Rep& n_full);

// Certificate documents, all self-contained (they embed the actions).
json divides_certificate(const DividesCert& c, const Rep& m_full, const Rep& n_full);
json similarity_certificate(const SimilarityCert& c, const Rep& m_full, const Rep& n_full);
json isomorphism_certificate(const Mat& f, const Rep& m_full, const Rep& n_full);
json projective_certificate(const SplitWitness& w, const LeftModule& m);

/// Both one-sided restrictions are finitely generated projective and the
/// left and right duals are similar as (S,R)-bimodules.
Report is_qf_bimodule(const Bimodule& m, Rng& rng);
/// As above with the duals isomorphic.
Report is_frobenius_bimodule(const Bimodule& m, Rng& rng);

/// Projectivity check of one side rendered as a report check.
Check projectivity_check(const LeftModule& m, const std::string& name, const std::string& anchor);
/// Similarity check rendered as a report check.
Check similarity_check(const Bimodule& m, const Bimodule& n, Rng& rng, const std::string& name,
                       const std::string& anchor);

struct DualStage {
  int index;         // 0 is M; k > 0 iterates left duals, k < 0 iterates right duals
  std::string side;  // "left-dual", "right-dual" or "input"
  Bimodule module;
};
/// M, its iterated left duals and iterated right duals, `depth` each way,
/// ordered by index. Throws NotProjectiveAtStage(k) when a dual cannot be taken
/// because the relevant restriction of the previous stage is not projective.
std::vector<DualStage> dual_sequence(const Bimodule& m, std::size_t depth);

/// If M and N are quasi-Frobenius, so is M (x)_S N. Vacuous when a hypothesis fails.
Report qf_tensor_check(const Algebra& s, const Bimodule& m, const Bimodule& n, Rng& rng);

}  // namespace qfw
