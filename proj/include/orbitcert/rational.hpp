#ifndef ORBITCERT_RATIONAL_HPP
#define ORBITCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "orbitcert/errors.hpp"

namespace orbitcert {

/// Exact arbitrary-precision rational. All algebraic computations in the
/// library run over this type; floating point only appears in the numeric
/// descent fallback.
using Rat = mpq_class;
using Int = mpz_class;

using QVec = std::vector<Rat>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Rejects anything
/// else, in particular decimal floats.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw RationalParseError("empty string");
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash != std::string::npos)
        throw RationalParseError("'" + text + "' has multiple '/'");
      slash = i;
    } else if (c == '-' || c == '+') {
      if (i != 0 && i != slash + 1)
        throw RationalParseError("'" + text + "' has a stray sign");
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw RationalParseError("'" + text + "' contains '" + std::string(1, c) +
                               "'");
    }
  }
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw RationalParseError("'" + text + "' is not a rational");
  if (slash != std::string::npos && sgn(Rat(r.get_den())) == 0)
    throw RationalParseError("'" + text + "' has zero denominator");
  r.canonicalize();
  return r;
}

/// Canonical serialization: "p" or "p/q" with q > 1.
inline std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline QVec zero_vector(std::size_t n) { return QVec(n, Rat(0)); }

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

inline QVec add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline QVec scale(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Rescales a nonzero rational vector to coprime integer coordinates,
/// preserving direction. The zero vector is returned unchanged.
inline QVec clear_to_integers(const QVec& v) {
  if (is_zero(v)) return v;
  Int den_lcm = 1;
  for (const auto& x : v)
    if (!is_zero(x)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Int num_gcd = 0;
  for (const auto& x : v) {
    if (is_zero(x)) continue;
    Int n = x.get_num() * den_lcm / x.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  QVec out(v.size());
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * factor;
    out[i].canonicalize();
  }
  return out;
}

}  // namespace orbitcert

#endif
