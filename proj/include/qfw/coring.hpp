#pragma once

#include "qfw/ringext.hpp"

namespace qfw {

/// An A-coring: an (A,A)-bimodule C with Delta : C -> C (x)_A C (quotient
/// basis of tensor_over(A, C, C)) and eps : C -> A.
struct Coring {
  Algebra base;
  Bimodule carrier;
  TensorProduct square;  // C (x)_A C
  Mat delta;             // dim(square) x dim C
  Mat eps;               // dim A x dim C

  std::size_t dim() const { return carrier.dim(); }
  /// Delta followed by the section: raw coordinates a*dim C + b.
  Mat delta_raw() const { return square.section * delta; }
};

/// Validates bimodule-linearity, coassociativity and both counit laws.
Coring make_coring(const Bimodule& carrier, Mat delta, Mat eps);
/// A as an A-coring with Delta(a) = a (x) 1 and eps = id.
Coring trivial_coring(const Algebra& a);
/// S (x)_R S with Delta(s (x) s') = (s (x) 1) (x)_S (1 (x) s') and eps = multiplication.
Coring sweedler(const Extension& e);
bool is_trivial_coring(const Coring& c);

/// *C = Hom_A(_A C, _A A) or C* = Hom_A(C_A, A_A) with the convolution product,
/// unit eps and the embedding of A.
struct DualRing {
  Algebra ring;
  AlgebraHom embedding;
  HomSpace maps;  // basis element i is the functional for ring basis vector i
};
DualRing left_dual_ring(const Coring& c);
DualRing right_dual_ring(const Coring& c);

/// C as an (A, *C)-bimodule: c . f = c_(1) f(c_(2)).
Bimodule coring_over_left_dual(const Coring& c, const DualRing& ld);
/// *C as an (A, *C)-bimodule: (a . f)(c) = f(c a), right regular.
Bimodule left_dual_as_a_bimodule(const Coring& c, const DualRing& ld);
/// *C as a (*C, A)-bimodule: left regular, (f . a)(c) = f(c) a.
Bimodule left_dual_as_bimodule_over_a(const Coring& c, const DualRing& ld);
/// C as a (C*, A)-bimodule: g . c = g(c_(1)) c_(2).
Bimodule coring_over_right_dual(const Coring& c, const DualRing& rd);
/// C* as a (C*, A)-bimodule: left regular, (f . a)(c) = f(a c).
Bimodule right_dual_as_bimodule(const Coring& c, const DualRing& rd);

/// A one-sided comodule. Right: carrier is a (k, A)-bimodule, coaction into
/// M (x)_A C. Left: carrier is an (A, k)-bimodule, coaction into C (x)_A M.
struct Comodule {
  Side side;
  Bimodule carrier;
  TensorProduct target;
  Mat coaction;
};
/// Validates linearity, coassociativity and counit.
Comodule make_comodule(const Coring& c, Side side, const Bimodule& carrier, Mat coaction);
/// C over itself with coaction Delta.
Comodule regular_comodule(const Coring& c, Side side);

/// Right comodule -> right *C-module (as a left module over opposite(*C)),
/// m . f = m_[0] f(m_[1]). Left comodule -> left C*-module, g . n = g(n_[-1]) n_[0].
/// Throws NotFgpOverBase when C is not projective on the relevant side.
LeftModule comodule_to_module(const Coring& c, const Comodule& m);

/// Kernel of rho (x) N - M (x) lambda inside M (x)_A N.
struct Cotensor {
  TensorProduct tensor;  // M (x)_A N
  Mat basis;             // columns span the cotensor product, in tensor coordinates
  std::size_t dim() const { return basis.cols(); }
};
Cotensor cotensor(const Coring& c, const Comodule& m, const Comodule& n);

/// Primary (iii) plus cross-checks (iv), (vi), (vii), (viii); an
/// Inconsistent verdict when they disagree.
Report is_qf_coring(const Coring& c, Rng& rng);

/// (rho, phi) from an A-coring C to a B-coring D.
struct CoringHom {
  AlgebraHom rho;
  Coring source;
  Coring target;
  Mat phi;  // dim D x dim C
};
/// Checks the axioms; for trivial corings also reports the quasi-Frobenius
/// morphism verdict through the extension rho.
Report validate_coring_hom(const CoringHom& h, Rng& rng);

}  // namespace qfw
