#ifndef ORBITCERT_ORBIT_HPP
#define ORBITCERT_ORBIT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbitcert/homvector.hpp"
#include "orbitcert/kempf_ness.hpp"
#include "orbitcert/simplex.hpp"
#include "orbitcert/subalgebra.hpp"
#include "orbitcert/transcript.hpp"

namespace orbitcert {

/// A destabilizing (or boundary) one-parameter direction: lambda in the
/// coordinates of torus_basis, the realized semisimple element, and the exact
/// pairings against the support weights.
struct OneParameterCertificate {
  std::vector<Element> torus_basis;
  QVec lambda;
  Element realized_s;
  std::vector<QVec> weights;
  std::vector<Rat> pairings;
};

/// Gordan-style infeasibility proof: a convex combination of the support
/// weights equal to zero. Certifies that no lambda has all pairings positive.
struct GordanCertificate {
  std::vector<Element> torus_basis;
  std::vector<QVec> weights;
  QVec combination;  // nonnegative, sums to 1
};

/// 0-in-relative-interior proof: for each support weight a nonnegative
/// combination of all weights that cancels it. Certifies torus-orbit
/// closedness.
struct RelintCertificate {
  std::vector<Element> torus_basis;
  std::vector<QVec> weights;
  std::vector<QVec> combinations;  // entry a: y with weight_a + sum y_i w_i = 0
};

/// Exact witness of non-closedness with a nonzero limit: the boundary point
/// reached along the certificate direction has strictly smaller orbit
/// dimension.
struct BoundaryLimit {
  Element conjugator;  // v was moved by exp(ad conjugator) first
  std::vector<Element> limit_images;
  std::size_t orbit_dim_v = 0;
  std::size_t orbit_dim_limit = 0;
};

struct NumericalEvidence {
  DescentStatus status = DescentStatus::IterationLimit;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  double tolerance = 0.0;
};

enum class OrbitKind { ZeroInClosure, ClosedOrbit, NotClosedNonzeroLimit, NumericalOnly };

inline std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::ZeroInClosure: return "ZeroInClosure";
    case OrbitKind::ClosedOrbit: return "ClosedOrbit";
    case OrbitKind::NotClosedNonzeroLimit: return "NotClosedNonzeroLimit";
    default: return "NumericalOnly";
  }
}

struct OrbitVerdict {
  OrbitKind kind = OrbitKind::NumericalOnly;
  bool exact = false;
  std::optional<OneParameterCertificate> certificate;
  std::optional<GordanCertificate> gordan;
  std::optional<RelintCertificate> relint;
  std::optional<BoundaryLimit> boundary;
  std::optional<NumericalEvidence> numerics;
  std::vector<std::string> notes;

  bool zero_in_closure_positive() const {
    return kind == OrbitKind::ZeroInClosure;
  }
  bool closedness_negative() const {
    return kind == OrbitKind::ZeroInClosure ||
           kind == OrbitKind::NotClosedNonzeroLimit;
  }
};

// ---------------------------------------------------------------------------
// LP layer
// ---------------------------------------------------------------------------

/// Destabilizing direction in the torus: lambda with <alpha, lambda> > 0 for
/// every support weight, found by exact LP on the homogenized system
/// <alpha, lambda> >= 1. Empty support (v = 0) yields the zero certificate.
inline std::optional<OneParameterCertificate> instability_lp(
    const WeightSupport& ws) {
  const std::size_t r = ws.torus_basis.size();
  OneParameterCertificate cert;
  cert.torus_basis = ws.torus_basis;
  cert.weights = ws.weights;
  if (ws.weights.empty()) {
    cert.lambda = zero_vector(r);
    cert.realized_s = r ? Element(zero_vector(ws.torus_basis[0].dim()))
                        : Element();
    return cert;
  }
  QMat a = QMat::from_rows(ws.weights);
  auto lambda = feasible_geq(a, QVec(ws.weights.size(), Rat(1)));
  if (!lambda) return std::nullopt;
  cert.lambda = clear_to_integers(*lambda);
  for (const auto& w : ws.weights) cert.pairings.push_back(dot(w, cert.lambda));
  QVec s = zero_vector(ws.torus_basis.empty() ? 0 : ws.torus_basis[0].dim());
  for (std::size_t j = 0; j < r; ++j)
    if (sgn(cert.lambda[j]) != 0)
      s = add(s, scale(cert.lambda[j], ws.torus_basis[j].coords));
  cert.realized_s = Element(std::move(s));
  return cert;
}

/// Infeasibility counterpart of instability_lp. Exists exactly when the open
/// cone is empty and the support is nonempty.
inline std::optional<GordanCertificate> gordan_certificate(
    const WeightSupport& ws) {
  if (ws.weights.empty()) return std::nullopt;
  const std::size_t r = ws.torus_basis.size();
  QMat e(r + 1, ws.weights.size());
  for (std::size_t c = 0; c < ws.weights.size(); ++c) {
    for (std::size_t j = 0; j < r; ++j) e(j, c) = ws.weights[c][j];
    e(r, c) = 1;
  }
  QVec d = zero_vector(r + 1);
  d[r] = 1;
  auto y = solve_eq_nonneg(e, d);
  if (!y) return std::nullopt;
  GordanCertificate g;
  g.torus_basis = ws.torus_basis;
  g.weights = ws.weights;
  g.combination = *y;
  return g;
}

struct ClosednessResult {
  bool closed = false;
  std::optional<OneParameterCertificate> witness;  // when not closed
  std::optional<RelintCertificate> relint;         // when closed
};

/// Torus-orbit closedness: closed iff 0 lies in the relative interior of the
/// convex hull of the support. Returns the witness direction or the
/// relative-interior certificate.
inline ClosednessResult closedness_lp(const WeightSupport& ws) {
  ClosednessResult out;
  if (ws.weights.empty()) {
    out.closed = true;
    out.relint = RelintCertificate{ws.torus_basis, {}, {}};
    return out;
  }
  const std::size_t k = ws.weights.size();
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<QVec> rows = ws.weights;
    rows.push_back(ws.weights[a]);
    QVec b(k + 1, Rat(0));
    b[k] = 1;
    auto lambda = feasible_geq(QMat::from_rows(rows), b);
    if (lambda) {
      OneParameterCertificate cert;
      cert.torus_basis = ws.torus_basis;
      cert.weights = ws.weights;
      cert.lambda = clear_to_integers(*lambda);
      for (const auto& w : ws.weights)
        cert.pairings.push_back(dot(w, cert.lambda));
      QVec s = zero_vector(ws.torus_basis.empty() ? 0
                                                  : ws.torus_basis[0].dim());
      for (std::size_t j = 0; j < ws.torus_basis.size(); ++j)
        if (sgn(cert.lambda[j]) != 0)
          s = add(s, scale(cert.lambda[j], ws.torus_basis[j].coords));
      cert.realized_s = Element(std::move(s));
      out.closed = false;
      out.witness = std::move(cert);
      return out;
    }
  }
  out.closed = true;
  RelintCertificate rc;
  rc.torus_basis = ws.torus_basis;
  rc.weights = ws.weights;
  for (std::size_t a = 0; a < k; ++a) {
    auto y = nonneg_combination(ws.weights, scale(Rat(-1), ws.weights[a]));
    // guaranteed by Farkas duality of the loop above
    rc.combinations.push_back(y.value());
  }
  out.relint = std::move(rc);
  return out;
}

// ---------------------------------------------------------------------------
// torus extraction and conjugation sampling
// ---------------------------------------------------------------------------

inline bool is_abelian(const LieAlgebra& g, const Subalgebra& h) {
  for (std::size_t i = 0; i < h.basis.size(); ++i)
    for (std::size_t j = i + 1; j < h.basis.size(); ++j)
      if (!bracket(g, h.basis[i], h.basis[j]).is_zero()) return false;
  return true;
}

inline bool is_rational_semisimple(const LieAlgebra& g, const Element& x) {
  try {
    verify_rational_semisimple(g, x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

struct TorusExtraction {
  std::vector<Element> basis;
  bool cartan_certified = false;  // self-centralizing inside the acting algebra
  bool spans_acting = false;      // the torus is the whole acting algebra
};

/// Maximal commuting family of rational semisimple elements in a reductive
/// acting subalgebra: the split part of the center plus a greedy extension
/// by seeded candidates. Certification = the family self-centralizes.
inline TorusExtraction extract_torus(const LieAlgebra& g,
                                     const Subalgebra& acting,
                                     std::uint64_t seed) {
  TorusExtraction out;
  if (acting.dim() == 0) {
    out.cartan_certified = true;
    out.spans_acting = true;
    return out;
  }
  // center of the acting algebra
  std::vector<QVec> cond;
  for (const auto& b : acting.basis) {
    QMat adb = g.ad(b);
    for (std::size_t r = 0; r < g.dim(); ++r) cond.push_back(adb.row(r));
  }
  bool full_center = true;
  for (const auto& z : detail::cut_span(g, acting.basis, cond)) {
    if (is_rational_semisimple(g, z))
      out.basis.push_back(z);
    else
      full_center = false;
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> coeff(-2, 2);
  SpanBuilder tspan(g.dim());
  for (const auto& t : out.basis) tspan.add(t.coords);

  while (true) {
    // centralizer of the current family inside acting
    std::vector<QVec> tcond;
    for (const auto& t : out.basis) {
      QMat adt = g.ad(t);
      for (std::size_t r = 0; r < g.dim(); ++r) tcond.push_back(adt.row(r));
    }
    std::vector<Element> centr = out.basis.empty()
                                     ? acting.basis
                                     : detail::cut_span(g, acting.basis, tcond);
    SpanBuilder cspan = detail::span_of(g, centr);
    if (cspan.size() == tspan.size()) {
      out.cartan_certified = full_center;
      break;
    }
    bool extended = false;
    int failures = 0;
    std::size_t next_basis_candidate = 0;
    while (failures < 50) {
      Element cand;
      if (next_basis_candidate < centr.size()) {
        cand = centr[next_basis_candidate++];
      } else {
        QVec c = zero_vector(g.dim());
        for (const auto& z : centr) {
          int f = coeff(rng);
          if (f != 0) c = add(c, scale(Rat(f), z.coords));
        }
        cand = Element(std::move(c));
      }
      if (cand.is_zero() || tspan.contains(cand.coords)) {
        ++failures;
        continue;
      }
      if (!is_rational_semisimple(g, cand)) {
        ++failures;
        continue;
      }
      tspan.add(cand.coords);
      out.basis.push_back(std::move(cand));
      extended = true;
      break;
    }
    if (!extended) break;  // give up: uncertified
  }
  out.spans_acting = tspan.size() == acting.dim();
  return out;
}

/// Ad-nilpotent elements of the acting algebra, found as nonzero-weight
/// vectors of the extracted torus. Used to randomize the vector inside its
/// orbit while staying exactly rational.
inline std::vector<Element> nilpotent_directions(const LieAlgebra& g,
                                                 const Subalgebra& acting,
                                                 const std::vector<Element>& torus) {
  std::vector<Element> out;
  if (acting.dim() == 0 || torus.empty()) return out;
  for (const auto& t : torus) {
    QMat at = g.ad(t);
    std::vector<QVec> cols;
    for (const auto& b : acting.basis) cols.push_back(b.coords);
    QMat sys = QMat::from_columns(cols);
    QMat restr(acting.dim(), acting.dim());
    for (std::size_t k = 0; k < acting.dim(); ++k) {
      auto coeff = solve(sys, at * acting.basis[k].coords);
      for (std::size_t r = 0; r < acting.dim(); ++r) restr(r, k) = (*coeff)[r];
    }
    auto roots = qpoly::rational_roots(
                     qpoly::squarefree_part(char_poly(restr)))
                     .roots;
    for (const auto& lam : roots) {
      if (sgn(lam) == 0) continue;
      QMat shifted = restr;
      for (std::size_t i = 0; i < restr.rows(); ++i) shifted(i, i) -= lam;
      for (const auto& k : kernel(shifted)) {
        QVec vec = zero_vector(g.dim());
        for (std::size_t c = 0; c < acting.dim(); ++c)
          if (sgn(k[c]) != 0) vec = add(vec, scale(k[c], acting.basis[c].coords));
        Element cand(std::move(vec));
        if (detail::is_ad_nilpotent(g, cand)) out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// top-level orbit decisions
// ---------------------------------------------------------------------------

struct OrbitOptions {
  double kn_tol = 1e-8;
  int kn_max_iter = 10000;
  int conjugation_attempts = 12;
};

namespace detail {

/// Re-expresses an instability certificate found for exp(ad u) v as a
/// single-element certificate for v itself, verified exactly.
inline std::optional<OneParameterCertificate> pull_back_certificate(
    const LieAlgebra& g, const HomVector& v, const Element& u,
    const Element& realized_s) {
  QMat inv = exp_ad_nilpotent(g, Element(scale(Rat(-1), u.coords)));
  Element s(inv * realized_s.coords);
  if (!is_rational_semisimple(g, s)) return std::nullopt;
  WeightSupport ws = weight_support(v, {s});
  for (const auto& w : ws.weights)
    if (sgn(w[0]) <= 0) return std::nullopt;
  OneParameterCertificate cert;
  cert.torus_basis = {s};
  cert.lambda = QVec{Rat(1)};
  cert.realized_s = s;
  cert.weights = ws.weights;
  for (const auto& w : ws.weights) cert.pairings.push_back(w[0]);
  return cert;
}

inline Json json_of_weights(const std::vector<QVec>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(json_of(w));
  return arr;
}

}  // namespace detail

/// Decides whether 0 lies in the closure of the acting-group orbit of v.
/// Exact positive verdicts carry a verified one-parameter certificate; exact
/// negatives exist for torus actions and the trivial group and carry a
/// Gordan-style proof. Everything else is numerical-only.
inline OrbitVerdict zero_in_orbit_closure(const LieAlgebra& g,
                                          const HomVector& v,
                                          const Subalgebra& acting,
                                          std::uint64_t seed,
                                          const OrbitOptions& opts = {},
                                          Transcript* tr = nullptr) {
  if (!is_reductive(g, acting)) throw NonReductiveActingAlgebra();
  OrbitVerdict out;

  if (v.is_zero()) {
    out.kind = OrbitKind::ZeroInClosure;
    out.exact = true;
    OneParameterCertificate cert;
    cert.realized_s = g.zero();
    cert.lambda = QVec{};
    out.certificate = cert;
    out.notes.push_back("v = 0: the zero certificate suffices");
    return out;
  }

  TorusExtraction torus = extract_torus(g, acting, seed);
  if (tr)
    tr->add("torus_extraction",
            Json{{"basis", json_of(torus.basis)},
                 {"cartan_certified", torus.cartan_certified},
                 {"spans_acting", torus.spans_acting}});

  WeightSupport ws = weight_support(v, torus.basis);
  if (tr)
    tr->add("weight_support", Json{{"weights", detail::json_of_weights(ws.weights)}});

  if (auto cert = instability_lp(ws)) {
    for (const auto& p : cert->pairings)
      if (sgn(p) <= 0)
        throw Error("internal: unverified instability certificate");
    out.kind = OrbitKind::ZeroInClosure;
    out.exact = true;
    out.certificate = std::move(*cert);
    if (tr)
      tr->add("instability_lp",
              Json{{"feasible", true},
                   {"lambda", json_of(out.certificate->lambda)},
                   {"realized_s", json_of(out.certificate->realized_s)}});
    return out;
  }
  if (tr) tr->add("instability_lp", Json{{"feasible", false}});

  const bool torus_exact = is_abelian(g, acting) && torus.spans_acting &&
                           torus.cartan_certified;
  if (torus_exact || acting.dim() == 0) {
    out.exact = true;
    out.gordan = gordan_certificate(ws);
    ClosednessResult cl = closedness_lp(ws);
    if (cl.closed) {
      out.kind = OrbitKind::ClosedOrbit;
      out.relint = std::move(cl.relint);
    } else {
      out.kind = OrbitKind::NotClosedNonzeroLimit;
      out.certificate = std::move(cl.witness);
    }
    out.notes.push_back("torus action: LP verdicts are exact");
    return out;
  }

  // randomized conjugations: exp(ad u) preserves the orbit and exact
  // rationality, and may expose a destabilizing direction of the fixed torus
  std::vector<Element> nil = nilpotent_directions(g, acting, torus.basis);
  std::mt19937_64 rng(seed * 0x100000001b3ull + 0xcbf29ce484222325ull);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int attempt = 0; attempt < opts.conjugation_attempts && !nil.empty();
       ++attempt) {
    QVec u = zero_vector(g.dim());
    if (attempt < static_cast<int>(2 * nil.size())) {
      int idx = attempt / 2;
      Rat sign_val(attempt % 2 == 0 ? 1 : -1);
      u = scale(sign_val, nil[idx].coords);
    } else {
      for (const auto& d : nil) {
        int f = coeff(rng);
        if (f != 0) u = add(u, scale(Rat(f), d.coords));
      }
    }
    Element ue(u);
    if (ue.is_zero() || !detail::is_ad_nilpotent(g, ue)) continue;
    QMat conj = exp_ad_nilpotent(g, ue);
    HomVector moved = apply_to_images(v, conj);
    WeightSupport wsm = weight_support(moved, torus.basis);
    auto cert = instability_lp(wsm);
    if (!cert) continue;
    auto pulled = detail::pull_back_certificate(g, v, ue, cert->realized_s);
    if (!pulled) continue;
    out.kind = OrbitKind::ZeroInClosure;
    out.exact = true;
    out.certificate = std::move(*pulled);
    out.notes.push_back("found via conjugation attempt " +
                        std::to_string(attempt));
    if (tr)
      tr->add("conjugated_instability",
              Json{{"attempt", attempt},
                   {"conjugator", json_of(ue)},
                   {"realized_s", json_of(out.certificate->realized_s)}});
    return out;
  }

  // numerical fallback
  DescentResult dr = kempf_ness_descent(v, acting, opts.kn_tol, opts.kn_max_iter);
  out.numerics = NumericalEvidence{dr.status, dr.norm_infimum_estimate,
                                   dr.grad_norm, dr.iterations, opts.kn_tol};
  if (dr.status == DescentStatus::ConvergedToZero) {
    out.kind = OrbitKind::ZeroInClosure;
    out.exact = false;
    out.notes.push_back("numerical-only: descent reached the tolerance");
  } else {
    out.kind = OrbitKind::NumericalOnly;
    out.exact = false;
    out.notes.push_back(
        dr.status == DescentStatus::ConvergedToPositiveMin
            ? "numerical-only: descent stalled at a positive minimum"
            : "numerical-only: iteration limit");
  }
  if (tr)
    tr->add("kempf_ness",
            Json{{"status", to_string(dr.status)},
                 {"value", dr.norm_infimum_estimate},
                 {"grad_norm", dr.grad_norm},
                 {"iterations", dr.iterations}});
  return out;
}

namespace detail {

/// Dimension of the acting orbit at w: rank of the infinitesimal action.
inline std::size_t orbit_dimension(const LieAlgebra& g,
                                   const std::vector<Element>& images,
                                   const Subalgebra& acting) {
  if (acting.dim() == 0) return 0;
  QMat m(g.dim() * images.size(), acting.dim());
  for (std::size_t b = 0; b < acting.dim(); ++b) {
    QMat adb = g.ad(acting.basis[b]);
    for (std::size_t k = 0; k < images.size(); ++k) {
      QVec col = adb * images[k].coords;
      for (std::size_t i = 0; i < g.dim(); ++i)
        m(k * g.dim() + i, b) = col[i];
    }
  }
  return rank(m);
}

/// Exact limit of lambda(t) v' as t -> 0: the zero-pairing components.
inline std::vector<Element> limit_along(const WeightSupport& ws,
                                        const QVec& lambda,
                                        const LieAlgebra& g) {
  std::vector<Element> limit(ws.domain_size, Element(zero_vector(g.dim())));
  for (std::size_t w = 0; w < ws.weights.size(); ++w) {
    if (sgn(dot(ws.weights[w], lambda)) != 0) continue;
    for (std::size_t k = 0; k < ws.domain_size; ++k)
      limit[k].coords = add(limit[k].coords, ws.component_images[w][k].coords);
  }
  return limit;
}

}  // namespace detail

/// Decides closedness of the acting-group orbit of v. Torus actions are
/// exact; for non-abelian groups exact conclusions come from an instability
/// certificate (0 in the closure of a nonzero orbit) or an orbit-dimension
/// drop at an exact limit point, and positive verdicts are numerical-only.
inline OrbitVerdict orbit_closed(const LieAlgebra& g, const HomVector& v,
                                 const Subalgebra& acting, std::uint64_t seed,
                                 const OrbitOptions& opts = {},
                                 Transcript* tr = nullptr) {
  if (!is_reductive(g, acting)) throw NonReductiveActingAlgebra();
  OrbitVerdict out;

  if (v.is_zero()) {
    out.kind = OrbitKind::ClosedOrbit;
    out.exact = true;
    out.relint = RelintCertificate{};
    out.notes.push_back("orbit of 0 is {0}");
    return out;
  }

  TorusExtraction torus = extract_torus(g, acting, seed);
  WeightSupport ws = weight_support(v, torus.basis);
  const bool torus_exact = is_abelian(g, acting) && torus.spans_acting &&
                           torus.cartan_certified;

  if (torus_exact) {
    ClosednessResult cl = closedness_lp(ws);
    out.exact = true;
    if (cl.closed) {
      out.kind = OrbitKind::ClosedOrbit;
      out.relint = std::move(cl.relint);
    } else {
      bool all_positive = true;
      for (const auto& p : cl.witness->pairings)
        all_positive = all_positive && sgn(p) > 0;
      out.kind = all_positive ? OrbitKind::ZeroInClosure
                              : OrbitKind::NotClosedNonzeroLimit;
      out.certificate = std::move(cl.witness);
    }
    if (tr)
      tr->add("closedness_lp",
              Json{{"closed", cl.closed},
                   {"weights", detail::json_of_weights(ws.weights)}});
    return out;
  }

  // 0 in the closure of a nonzero orbit forces non-closedness
  OrbitVerdict zero = zero_in_orbit_closure(g, v, acting, seed, opts, tr);
  if (zero.zero_in_closure_positive() && zero.exact) {
    out = std::move(zero);
    out.notes.push_back("not closed: 0 lies in the closure of a nonzero orbit");
    return out;
  }

  // boundary-limit search over the torus and seeded conjugations
  std::vector<Element> nil = nilpotent_directions(g, acting, torus.basis);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::size_t dim_v = detail::orbit_dimension(g, v.images, acting);
  for (int attempt = -1;
       attempt < opts.conjugation_attempts; ++attempt) {
    Element u(zero_vector(g.dim()));
    if (attempt >= 0) {
      if (nil.empty()) break;
      if (attempt < static_cast<int>(2 * nil.size())) {
        Rat sign_val(attempt % 2 == 0 ? 1 : -1);
        u.coords = scale(sign_val, nil[attempt / 2].coords);
      } else {
        for (const auto& d : nil) {
          int f = coeff(rng);
          if (f != 0) u.coords = add(u.coords, scale(Rat(f), d.coords));
        }
      }
      if (u.is_zero() || !detail::is_ad_nilpotent(g, u)) continue;
    }
    HomVector moved =
        attempt < 0 ? v : apply_to_images(v, exp_ad_nilpotent(g, u));
    WeightSupport wsm = attempt < 0 ? ws : weight_support(moved, torus.basis);
    ClosednessResult cl = closedness_lp(wsm);
    if (cl.closed) continue;
    std::vector<Element> limit =
        detail::limit_along(wsm, cl.witness->lambda, g);
    bool limit_zero = true;
    for (const auto& x : limit) limit_zero = limit_zero && x.is_zero();
    if (limit_zero) {
      // the witness destabilizes the conjugate outright
      auto pulled = attempt < 0
                        ? cl.witness
                        : detail::pull_back_certificate(
                              g, v, u, cl.witness->realized_s);
      if (pulled) {
        out.kind = OrbitKind::ZeroInClosure;
        out.exact = true;
        out.certificate = std::move(*pulled);
        out.notes.push_back(
            "not closed: 0 lies in the closure of a nonzero orbit");
        return out;
      }
      continue;
    }
    std::size_t dim_l = detail::orbit_dimension(g, limit, acting);
    if (dim_l < dim_v) {
      out.kind = OrbitKind::NotClosedNonzeroLimit;
      out.exact = true;
      out.certificate = std::move(cl.witness);
      out.boundary = BoundaryLimit{u, limit, dim_v, dim_l};
      if (tr)
        tr->add("boundary_limit",
                Json{{"conjugator", json_of(u)},
                     {"limit", json_of(limit)},
                     {"orbit_dim_v", dim_v},
                     {"orbit_dim_limit", dim_l}});
      return out;
    }
  }

  // numerical suggestion only
  if (!zero.numerics) {
    DescentResult dr =
        kempf_ness_descent(v, acting, opts.kn_tol, opts.kn_max_iter);
    zero.numerics = NumericalEvidence{dr.status, dr.norm_infimum_estimate,
                                      dr.grad_norm, dr.iterations, opts.kn_tol};
  }
  out.kind = OrbitKind::NumericalOnly;
  out.exact = false;
  out.numerics = zero.numerics;
  out.notes.push_back(
      out.numerics->status == DescentStatus::ConvergedToPositiveMin
          ? "numerical-only: norm minimum away from zero suggests a closed orbit"
          : "numerical-only: no exact conclusion");
  return out;
}

}  // namespace orbitcert

#endif
