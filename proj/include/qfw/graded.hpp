#pragma once

#include <vector>

#include "qfw/simdiv.hpp"

namespace qfw {

using GroupTable = std::vector<std::vector<std::size_t>>;

// A ring graded by a finite group G, given componentwise. The total basis is
// the concatenation of the component bases in group order.
class GradedRing {
 public:
  /// products[x * |G| + y] is R_x (x) R_y -> R_{xy}, a dim R_{xy} x (dim R_x * dim R_y)
  /// matrix with Kronecker column index i * dim R_y + j. The unit is solved for and
  /// must lie in R_e; the assembled algebra is validated.
  static GradedRing make(PrimeField field, GroupTable group, std::vector<std::size_t> dims,
                         std::vector<Mat> products);
  /// The grading of an algebra in which every basis vector is homogeneous.
  static GradedRing from_algebra(const Algebra& r, GroupTable group, std::vector<std::size_t> degree);

  const GroupTable& group() const { return group_; }
  std::size_t order() const { return group_.size(); }
  std::size_t identity() const { return e_; }
  std::size_t inverse(std::size_t x) const;
  std::size_t mul(std::size_t x, std::size_t y) const { return group_[x][y]; }

  const Algebra& total() const { return total_; }
  /// R_e with the inclusion into the total ring.
  const Algebra& base() const { return base_; }
  const AlgebraHom& base_embedding() const { return base_embedding_; }
  /// Total basis indices spanning R_x.
  const std::vector<std::size_t>& component(std::size_t x) const { return comp_[x]; }

  /// R_x as a left R_e-module.
  LeftModule component_module(std::size_t x) const;

 private:
  GradedRing(GroupTable g, std::size_t e, Algebra total, Algebra base, AlgebraHom emb,
             std::vector<std::vector<std::size_t>> comp)
      : group_(std::move(g)), e_(e), total_(std::move(total)), base_(std::move(base)),
        base_embedding_(std::move(emb)), comp_(std::move(comp)) {}
  GroupTable group_;
  std::size_t e_;
  Algebra total_;
  Algebra base_;
  AlgebraHom base_embedding_;
  std::vector<std::vector<std::size_t>> comp_;
};

/// A graded left module over a GradedRing. Components are lists of basis
/// indices of the total module.
struct GradedModule {
  LeftModule total;
  std::vector<std::vector<std::size_t>> components;

  /// Checks that the components partition the basis and R_x M_y lies in M_{xy}.
  static GradedModule make(const GradedRing& r, LeftModule total, std::vector<std::vector<std::size_t>> components);
};

GradedModule regular_graded(const GradedRing& r);

/// M_e as an R_e-module.
LeftModule restrict_e(const GradedRing& r, const GradedModule& m);
/// Ind(N)_y = R_y (x)_{R_e} N.
GradedModule induce(const GradedRing& r, const LeftModule& n);
/// Coind(N)_y = Hom_{R_e}(R_{y^-1}, N) with (r . f)(r') = f(r' r).
GradedModule coinduce(const GradedRing& r, const LeftModule& n);
/// M(x)_y = M_{yx}; the total module is unchanged.
GradedModule suspend(const GradedRing& r, const GradedModule& m, std::size_t x);

/// n -> 1 (x) n, from N to restrict_e(induce(N)).
Mat induction_unit(const GradedRing& r, const LeftModule& n);
/// f -> f(1), from restrict_e(coinduce(N)) to N.
Mat coinduction_counit(const GradedRing& r, const LeftModule& n);
/// Whether f is an invertible R_e-linear map between the two modules.
bool is_module_iso(const Mat& f, const LeftModule& source, const LeftModule& target);

/// R as an (R, R_e)-bimodule.
Bimodule graded_ring_bimodule(const GradedRing& r);
/// Coind(R_e) as an (R, R_e)-bimodule with (f . a)(r) = f(r) a.
Bimodule coinduced_base_bimodule(const GradedRing& r);

/// Every R_x projective over R_e and R similar to Coind(R_e).
Report is_qf_restriction(const GradedRing& r, Rng& rng);

}  // namespace qfw
