#include "qfw/poly.hpp"

#include <algorithm>

namespace qfw {

Poly::Poly(std::vector<Scalar> coeffs, Scalar p) : c_(std::move(coeffs)), p_(p) {
  for (auto& x : c_) x %= p;
  trim();
}

Poly Poly::x_power(std::size_t k, Scalar p) {
  std::vector<Scalar> c(k + 1, 0);
  c[k] = 1;
  return Poly(std::move(c), p);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((*this)[i] + o[i]) % p_;
  return Poly(std::move(c), p_);
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((*this)[i] + p_ - o[i]) % p_;
  return Poly(std::move(c), p_);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly({}, p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p_;
  std::vector<Scalar> c(acc.begin(), acc.end());
  return Poly(std::move(c), p_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  PrimeField f(p_);
  Scalar s = f.inv(lead());
  std::vector<Scalar> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(c_[i], s);
  return Poly(std::move(c), p_);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly({}, p_);
  std::vector<Scalar> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = static_cast<Scalar>(std::uint64_t(c_[i]) * (i % p_) % p_);
  return Poly(std::move(c), p_);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Usage, "polynomial division by zero");
  Scalar p = a.modulus();
  PrimeField f(p);
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly({}, p), a};
  std::vector<Scalar> q(a.degree() - db + 1, 0);
  Scalar inv_lead = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    Scalar coef = f.mul(r[i], inv_lead);
    q[i - db] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, b[j]));
  }
  return {Poly(std::move(q), p), Poly(std::move(r), p)};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Scalar p = a.modulus();
  Poly r0 = a, r1 = b, s0 = Poly::constant(1, p), s1({}, p), t0({}, p), t1 = Poly::constant(1, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  PrimeField f(p);
  Scalar s = f.inv(r0.lead());
  Poly c = Poly::constant(s, p);
  return {r0 * c, s0 * c, t0 * c};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Scalar p = base.modulus();
  Poly result = divmod(Poly::constant(1, p), mod).second;
  Poly b = divmod(base, mod).second;
  while (e) {
    if (e & 1) result = divmod(result * b, mod).second;
    b = divmod(b * b, mod).second;
    e >>= 1;
  }
  return result;
}

namespace {

// x^(p^k) mod f computed by repeated p-th powering.
Poly frobenius_power(const Poly& xpk, const Poly& f) { return powmod(xpk, f.modulus(), f); }

// Square-free monic f -> list of (g_d, d) where g_d is the product of irreducibles of degree d.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  Scalar p = f.modulus();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::x_power(1, p);
  Poly h = divmod(x, f).second;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = frobenius_power(h, f);
    Poly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Scalar p = f.modulus();
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  std::uint64_t e = 1;
  for (int i = 0; i < d; ++i) e *= p;
  e = (e - 1) / 2;
  for (;;) {
    std::vector<Scalar> c(f.degree());
    for (auto& x : c) x = dist(rng);
    Poly a(std::move(c), p);
    if (a.degree() <= 0) continue;
    Poly g = gcd(f, a);
    if (g.degree() <= 0 || g.degree() == f.degree()) {
      g = gcd(f, powmod(a, e, f) - Poly::constant(1, p));
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// Square-free decomposition: returns (a_i, i) with f = prod a_i^i.
std::vector<std::pair<Poly, int>> square_free(const Poly& f) {
  Scalar p = f.modulus();
  std::vector<std::pair<Poly, int>> out;
  Poly df = f.derivative();
  if (df.is_zero()) {
    // f(x) = g(x^p); the p-th root over F_p just takes every p-th coefficient.
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    for (auto& [g, m] : square_free(Poly(c, p))) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  Poly c = gcd(f, df);
  Poly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) {
    std::vector<Scalar> cc;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) cc.push_back(c.coeffs()[k]);
    for (auto& [g, m] : square_free(Poly(cc, p))) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<Poly, int>> out;
  for (auto& [sf, mult] : square_free(f.monic())) {
    for (auto& [g, d] : distinct_degree(sf)) {
      std::vector<Poly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& q : irr) out.emplace_back(q, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  // Merge equal irreducibles (possible when square_free splits a p-th power).
  std::vector<std::pair<Poly, int>> merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  return merged;
}

}  // namespace qfw
