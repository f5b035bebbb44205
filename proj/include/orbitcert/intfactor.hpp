#ifndef ORBITCERT_INTFACTOR_HPP
#define ORBITCERT_INTFACTOR_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "orbitcert/rational.hpp"

namespace orbitcert {

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) {
  return (a * b) % m;
}

/// Brent-cycle Pollard rho. `n` must be odd, composite and > 1.
inline Int pollard_brent(const Int& n, unsigned long c0) {
  if (n % 2 == 0) return 2;
  Int y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      Int lim = std::min(m, Int(r - k));
      for (Int i = 0; i < lim; ++i) {
        y = (mulmod(y, y, n) + c) % n;
        Int d = x - y;
        if (sgn(d) < 0) d = -d;
        q = mulmod(q, d, n);
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    g = 1;
    while (g == 1) {
      ys = (mulmod(ys, ys, n) + c) % n;
      Int d = x - ys;
      if (sgn(d) < 0) d = -d;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    }
  }
  return g;
}

inline void factor_into(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 50) != 0) {
    out[n] += 1;
    return;
  }
  // small trial division first
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      n /= static_cast<unsigned long>(p);
    }
    if (n == 1) return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 50) != 0) {
    out[n] += 1;
    return;
  }
  unsigned long c = 1;
  Int d = pollard_brent(n, c);
  while (d == n) d = pollard_brent(n, ++c);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0). Deterministic for a given input.
inline std::map<Int, int> factorize(const Int& n) {
  std::map<Int, int> out;
  Int a = abs(n);
  detail::factor_into(a, out);
  return out;
}

/// All positive divisors of |n| that are <= bound (bound <= |n| prunes the
/// enumeration). Sorted ascending.
inline std::vector<Int> divisors_up_to(const Int& n, const Int& bound) {
  std::vector<Int> divs{Int(1)};
  if (n == 0) return divs;
  for (const auto& [p, e] : factorize(n)) {
    std::size_t old = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < old; ++i) {
        Int d = divs[i] * pk;
        if (d <= bound) divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

}  // namespace orbitcert

#endif
