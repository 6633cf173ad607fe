#pragma once

#include "qfw/simdiv.hpp"

namespace qfw {

/// A ring map phi : R -> S with the two bimodules it induces on S.
struct Extension {
  AlgebraHom hom;
  Bimodule rs;  // _R S_S: left through phi, right regular
  Bimodule sr;  // _S S_R: left regular, right through phi
};

Extension make_extension(const AlgebraHom& hom);
/// beta o alpha for alpha : R -> S and beta : S -> T.
Extension compose(const Extension& alpha, const Extension& beta);

/// Primary verdict from _R S_S, cross-checked on _S S_R. Disagreement yields
/// an Inconsistent report.
Report is_qf_extension(const Extension& e, Rng& rng);
Report is_frobenius_extension(const Extension& e, Rng& rng);
/// If beta is quasi-Frobenius then alpha is iff beta o alpha is. Vacuous when
/// beta is not quasi-Frobenius.
Report compose_check(const Extension& alpha, const Extension& beta, Rng& rng);

/// The pair (restriction, induction) for a quasi-Frobenius extension evaluated
/// at an S-module X: alpha : X -> (S (x)_R X)^n and alphabar : (S (x)_R X)^n -> X.
struct PairWitness {
  std::size_t n = 0;
  Mat alpha;
  Mat alphabar;
  bool verified = false;
};
/// Throws Usage when the extension is not quasi-Frobenius or X is over another algebra.
PairWitness qf_pair_witness(const Extension& e, const LeftModule& x, Rng& rng);
json witness_certificate(const PairWitness& w, Scalar p);

}  // namespace qfw
