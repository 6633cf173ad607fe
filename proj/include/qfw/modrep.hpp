#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qfw/algebra.hpp"

namespace qfw {

/// A vector space with a family of operators. For a module the family is the
/// action of the algebra generators, for a bimodule the left generators
/// followed by the right generators. Homs, endomorphism rings and the
/// Krull-Schmidt engine only ever look at this view.
struct Rep {
  Scalar p = 0;
  std::size_t dim = 0;
  std::vector<Mat> ops;
};

/// Largest possible basis of {F : F A_k = B_k F for all k}, deterministic.
struct HomSpace {
  Scalar p = 2;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Mat> basis;  // target_dim x source_dim
  Coordinates coords;      // on vectorize(F)

  std::size_t dim() const { return basis.size(); }
  Vec coordinates(const Mat& f) const { return coords(vectorize(f)); }
  bool contains(const Mat& f) const { return coords.contains(vectorize(f)); }
  Mat combine(const Vec& c) const;
};

HomSpace hom_space(const Rep& source, const Rep& target);
bool intertwines(const Mat& f, const Rep& source, const Rep& target);
Rep direct_sum(const Rep& a, const Rep& b);
Rep power(const Rep& a, std::size_t n);
/// Rep on a complement pair: ops become q * op * b.
Rep restrict_rep(const Rep& r, const Mat& q, const Mat& b);

class LeftModule {
 public:
  /// Throws ModuleLaw when the unit does not act as identity or the action is
  /// not multiplicative.
  static LeftModule make(const Algebra& algebra, std::size_t dim, std::vector<Mat> action);

  const Algebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& actions() const { return action_; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  Mat act(const Vec& a) const;

  Rep rep() const;
  Rep full_rep() const;
  /// The module induced on a direct summand given by injection b and projection q.
  LeftModule restricted(const Mat& q, const Mat& b) const;

 private:
  LeftModule(Algebra a, std::size_t d, std::vector<Mat> act)
      : algebra_(std::move(a)), dim_(d), action_(std::move(act)) {}
  friend LeftModule make_module_unchecked(const Algebra&, std::size_t, std::vector<Mat>);
  Algebra algebra_;
  std::size_t dim_;
  std::vector<Mat> action_;
};

LeftModule make_module_unchecked(const Algebra& algebra, std::size_t dim, std::vector<Mat> action);
LeftModule regular_left(const Algebra& a);
LeftModule direct_sum(const LeftModule& a, const LeftModule& b);
HomSpace hom_space(const LeftModule& m, const LeftModule& n);

enum class Side { Left, Right };

/// (R,S)-bimodule. Right actions are stored as operators on column vectors:
/// right_action(j) * m = m . f_j, so right_action(j) right_action(k) = right_action(f_k f_j).
class Bimodule {
 public:
  /// Validates both module laws and that the actions commute (ActionsDoNotCommute(i,j)).
  static Bimodule make(const Algebra& left, const Algebra& right, std::vector<Mat> left_action,
                       std::vector<Mat> right_action);

  const Algebra& left_algebra() const { return left_; }
  const Algebra& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& left_actions() const { return la_; }
  const std::vector<Mat>& right_actions() const { return ra_; }
  Mat left_act(const Vec& r) const;
  Mat right_act(const Vec& s) const;

  Rep rep() const;
  Rep full_rep() const;
  Bimodule restricted(const Mat& q, const Mat& b) const;
  /// The same bimodule as a left module over R (x) S^op.
  LeftModule carrier() const;

 private:
  Bimodule(Algebra l, Algebra r, std::size_t d, std::vector<Mat> la, std::vector<Mat> ra)
      : left_(std::move(l)), right_(std::move(r)), dim_(d), la_(std::move(la)), ra_(std::move(ra)) {}
  friend Bimodule make_bimodule_unchecked(const Algebra&, const Algebra&, std::size_t, std::vector<Mat>,
                                          std::vector<Mat>);
  Algebra left_, right_;
  std::size_t dim_;
  std::vector<Mat> la_, ra_;
};

Bimodule make_bimodule_unchecked(const Algebra& left, const Algebra& right, std::size_t dim,
                                 std::vector<Mat> la, std::vector<Mat> ra);
Bimodule bimodule_from_actions(const Algebra& r, const Algebra& s, std::vector<Mat> left_action,
                               std::vector<Mat> right_action);
/// _A A_A.
Bimodule regular_bimodule(const Algebra& a);
/// A left R-module viewed as an (R, F_p)-bimodule.
Bimodule as_bimodule(const LeftModule& m);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
Bimodule power(const Bimodule& a, std::size_t n);
/// Repackage a left module over R (x) S^op (basis order of `enveloping`) as an (R,S)-bimodule.
Bimodule bimodule_from_carrier(const Algebra& r, const Algebra& s, const LeftModule& carrier);

/// Left: the left R-module. Right: the right S-module as a left module over opposite(S).
LeftModule restrict_bimodule(const Bimodule& m, Side side);

struct TensorProduct {
  Bimodule module;
  Mat projection;  // q x (dim M * dim N): raw m_a (x) n_b at index a*dim N + b
  Mat section;     // (dim M * dim N) x q: coset representatives
};
/// M (x)_S N with the rref-pivot quotient basis.
TensorProduct tensor_over(const Algebra& s, const Bimodule& m, const Bimodule& n);

struct DualModule {
  Bimodule module;
  HomSpace maps;
};
/// Hom_R(_R M, _R R) as an (S,R)-bimodule: (s f r)(m) = f(m s) r.
DualModule left_dual(const Bimodule& m);
/// Hom_S(M_S, S_S) as an (S,R)-bimodule: (s g r)(m) = s g(r m).
DualModule right_dual(const Bimodule& m);

/// pi: A^rank -> M (generators = the standard basis of M) and an A-linear
/// section sigma with pi sigma = id.
struct SplitWitness {
  std::size_t rank = 0;
  Mat pi;
  Mat sigma;
};
std::optional<SplitWitness> is_fg_projective(const LeftModule& m);
/// Operators of the regular module A^rank, for checking split witnesses.
Rep free_module_rep(const Algebra& a, std::size_t rank);

}  // namespace qfw
