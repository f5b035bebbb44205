#ifndef ORBITCERT_QPOLYNOMIAL_HPP
#define ORBITCERT_QPOLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "orbitcert/intfactor.hpp"
#include "orbitcert/rational.hpp"

namespace orbitcert {

/// Polynomials over the rationals, coefficient vector lowest degree first.
/// The zero polynomial is the empty vector.
namespace qpoly {

inline QVec trim(QVec p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

inline int degree(const QVec& p) { return static_cast<int>(p.size()) - 1; }

inline Rat eval(const QVec& p, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline QVec derivative(const QVec& p) {
  QVec d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * Rat(static_cast<long>(i)));
  return trim(std::move(d));
}

inline QVec monic(QVec p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  Rat inv = 1 / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<QVec, QVec> divmod(QVec a, const QVec& b) {
  a = trim(std::move(a));
  QVec q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trim(std::move(a));
  }
  return {trim(std::move(q)), a};
}

inline QVec gcd(QVec a, QVec b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    QVec r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

/// Squarefree part p / gcd(p, p').
inline QVec squarefree_part(const QVec& p) {
  QVec g = gcd(p, derivative(p));
  if (degree(g) <= 0) return monic(p);
  return monic(divmod(p, g).first);
}

/// Clears denominators and content: primitive integer coefficients.
inline std::vector<Int> primitive_integer_coeffs(const QVec& p) {
  Int den_lcm = 1;
  for (const auto& c : p)
    if (sgn(c) != 0)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  Int content = 0;
  for (const auto& c : p) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    out.push_back(n);
  }
  if (content > 1)
    for (auto& n : out) n /= content;
  return out;
}

/// All rational roots of p (each listed once), sorted ascending, together
/// with the fully deflated residual polynomial (monic). An empty residual of
/// degree 0 means p splits into rational linear factors.
struct RationalRoots {
  std::vector<Rat> roots;
  QVec residual;  // monic; degree >= 1 iff some factor has no rational root
};

inline RationalRoots rational_roots(const QVec& poly) {
  RationalRoots out;
  QVec p = monic(poly);
  if (p.empty() || degree(p) == 0) {
    out.residual = p;
    return out;
  }
  // peel off roots at zero
  std::size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) {
    out.roots.push_back(Rat(0));
    p.erase(p.begin(), p.begin() + low);
  }
  std::vector<Int> ip = primitive_integer_coeffs(p);
  if (ip.size() <= 1) {
    out.residual = QVec{Rat(1)};
    std::sort(out.roots.begin(), out.roots.end());
    return out;
  }
  // Cauchy bound on root magnitude: 1 + max |a_i| / |a_n|
  Int amax = 0;
  for (const auto& c : ip) {
    Int a = abs(c);
    if (a > amax) amax = a;
  }
  Int lead = abs(ip.back());
  Int num_bound = amax / lead + 2;  // |p| <= |a0| and |p/q| <= Cauchy bound
  std::vector<Int> nums = divisors_up_to(ip.front(), abs(ip.front()));
  std::vector<Int> dens = divisors_up_to(ip.back(), abs(ip.back()));
  std::vector<Rat> candidates;
  for (const auto& n : nums) {
    if (n > num_bound * lead) continue;
    for (const auto& d : dens) {
      Rat c(n, d);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& cand : candidates) {
    if (degree(p) < 1) break;
    if (sgn(eval(p, cand)) != 0) continue;
    out.roots.push_back(cand);
    // deflate all occurrences (p squarefree callers deflate once)
    QVec lin{-cand, Rat(1)};
    while (degree(p) >= 1 && sgn(eval(p, cand)) == 0) p = divmod(p, lin).first;
  }
  out.residual = monic(std::move(p));
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace qpoly
}  // namespace orbitcert

#endif
