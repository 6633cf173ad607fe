#pragma once

#include <optional>
#include <vector>

#include "qfw/modrep.hpp"
#include "qfw/poly.hpp"

namespace qfw {

/// End(M) with basis maps[i] and e_i e_j = maps[i] o maps[j].
struct EndRing {
  Algebra algebra;
  HomSpace maps;
};
EndRing end_ring(const Rep& m);
Algebra end_ring(const LeftModule& m);

/// Basis (as coordinate vectors) of the Jacobson radical. Computed with the
/// prime-field lifted-trace filtration, which reduces to the trace-form kernel
/// when p > dim E. The result is checked to be a nilpotent ideal.
std::vector<Vec> radical(const Algebra& e);

/// E / J with the rref-pivot basis of the quotient.
struct SemisimpleQuotient {
  Algebra algebra;
  Quotient quotient;
};
SemisimpleQuotient semisimple_quotient(const Algebra& e);

/// Nontrivial idempotent of E, or nullopt when E is local.
std::optional<Vec> find_idempotent(const Algebra& e, Rng& rng);

/// Minimal polynomial of x in E (Krylov on powers).
Poly minimal_polynomial(const Algebra& e, const Vec& x);
Vec evaluate(const Algebra& e, const Poly& f, const Vec& x);

struct Summand {
  Rep module;                    // indecomposable representative
  std::size_t multiplicity = 0;
  std::vector<Mat> injections;   // dim M x dim summand, one per copy
  std::vector<Mat> projections;  // dim summand x dim M
};

struct Decomposition {
  Rep module;
  std::vector<Summand> summands;  // ordered by (dimension, operator encoding)
};

Decomposition decompose(const Rep& m, Rng& rng);
Decomposition decompose(const LeftModule& m, Rng& rng);
Decomposition decompose(const Bimodule& m, Rng& rng);

/// Invertible intertwiner M -> N when M and N are indecomposable and
/// isomorphic. Deterministic: End is local, so some basis composite g_i f_j
/// is a unit exactly when the modules are isomorphic.
std::optional<Mat> iso_indecomposable(const Rep& m, const Rep& n);

/// Invertible intertwiner M -> N, or nullopt.
std::optional<Mat> iso(const Rep& m, const Rep& n, Rng& rng, int trials = 20);
std::optional<Mat> iso(const LeftModule& m, const LeftModule& n, Rng& rng, int trials = 20);
std::optional<Mat> iso(const Bimodule& m, const Bimodule& n, Rng& rng, int trials = 20);

/// Checks the decomposition identities: sum inj proj = I, proj inj = delta I,
/// and that every map intertwines.
bool decomposition_is_valid(const Decomposition& d);

}  // namespace qfw
