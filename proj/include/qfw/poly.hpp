#pragma once

#include <random>
#include <utility>
#include <vector>

#include "qfw/matrix.hpp"

namespace qfw {

using Rng = std::mt19937_64;

/// Univariate polynomial over F_p, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Scalar> coeffs, Scalar p);
  static Poly constant(Scalar c, Scalar p) { return Poly({c}, p); }
  static Poly x_power(std::size_t k, Scalar p);

  Scalar modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar lead() const { return c_.empty() ? 0 : c_.back(); }
  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly monic() const;
  Poly derivative() const;
  bool operator==(const Poly&) const = default;

 private:
  void trim();
  std::vector<Scalar> c_;
  Scalar p_ = 0;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
/// Returns (g, u, v) with u a + v b = g monic.
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);

/// Factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients). Square-free decomposition, distinct-degree and
/// Cantor-Zassenhaus equal-degree splitting (p odd).
std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng);

}  // namespace qfw
