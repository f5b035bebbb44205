#ifndef ORBITCERT_SUBALGEBRA_HPP
#define ORBITCERT_SUBALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitcert/errors.hpp"
#include "orbitcert/lie_algebra.hpp"
#include "orbitcert/qmatrix.hpp"

namespace orbitcert {

/// A bracket-closed subspace of an ambient algebra, optionally carrying a
/// validated Levi/unipotent-radical split.
struct Subalgebra {
  const LieAlgebra* ambient = nullptr;
  std::vector<Element> basis;
  std::optional<std::vector<Element>> levi_part;
  std::optional<std::vector<Element>> unipotent_radical;

  std::size_t dim() const { return basis.size(); }

  SpanBuilder span() const {
    SpanBuilder s(ambient->dim());
    for (const auto& b : basis) s.add(b.coords);
    return s;
  }

  bool contains(const Element& x) const { return span().contains(x.coords); }
};

namespace detail {

inline SpanBuilder span_of(const LieAlgebra& g,
                           const std::vector<Element>& vecs) {
  SpanBuilder s(g.dim());
  for (const auto& v : vecs) s.add(v.coords);
  return s;
}

/// Checks bracket closure of a list of vectors; returns the structure
/// constants gamma[i][j] (coordinates of [v_i, v_j] in the given list).
inline std::vector<std::vector<QVec>> structure_in_basis(
    const LieAlgebra& g, const std::vector<Element>& vecs) {
  std::vector<QVec> flat;
  for (const auto& v : vecs) flat.push_back(v.coords);
  QMat sys = QMat::from_columns(flat);
  std::size_t m = vecs.size();
  std::vector<std::vector<QVec>> gamma(m, std::vector<QVec>(m));
  for (std::size_t i = 0; i < m; ++i) {
    QMat adi = g.ad(vecs[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        gamma[i][j] = zero_vector(m);
        continue;
      }
      auto coeff = solve(sys, adi * vecs[j].coords);
      if (!coeff) throw NotClosed(static_cast<int>(i), static_cast<int>(j));
      gamma[i][j] = *coeff;
    }
  }
  return gamma;
}

inline bool is_ad_nilpotent(const LieAlgebra& g, const Element& x) {
  return is_nilpotent_matrix(g.ad(x));
}

/// {x in span(vecs) : [x, y] = 0 and extra linear conditions}. Rows of
/// `conditions` are functionals on ambient coordinates.
inline std::vector<Element> cut_span(const LieAlgebra& g,
                                     const std::vector<Element>& vecs,
                                     const std::vector<QVec>& conditions) {
  if (vecs.empty()) return {};
  QMat sys(conditions.size(), vecs.size());
  for (std::size_t r = 0; r < conditions.size(); ++r)
    for (std::size_t c = 0; c < vecs.size(); ++c)
      sys(r, c) = dot(conditions[r], vecs[c].coords);
  std::vector<Element> out;
  for (const auto& k : kernel(sys)) {
    QVec v = zero_vector(g.dim());
    for (std::size_t c = 0; c < vecs.size(); ++c)
      if (sgn(k[c]) != 0) v = add(v, scale(k[c], vecs[c].coords));
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Validates and wraps a subalgebra. Throws LinearDependenceError or
/// NotClosed; a declared split is validated, never trusted.
inline Subalgebra make_subalgebra(
    const LieAlgebra& g, std::vector<Element> basis,
    std::optional<std::vector<Element>> levi = std::nullopt,
    std::optional<std::vector<Element>> unip = std::nullopt) {
  for (const auto& b : basis)
    if (b.coords.size() != g.dim())
      throw DimensionMismatch("subalgebra basis vector of length " +
                              std::to_string(b.coords.size()));
  SpanBuilder span(g.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!span.add(basis[i].coords))
      throw LinearDependenceError("basis vector " + std::to_string(i) +
                                  " is dependent on the previous ones");
  detail::structure_in_basis(g, basis);  // closure check

  Subalgebra h;
  h.ambient = &g;
  h.basis = std::move(basis);

  if (levi.has_value() != unip.has_value())
    throw UnsupportedParameter(
        "levi_part and unipotent_radical must be declared together");
  if (levi) {
    SpanBuilder all(g.dim());
    for (const auto& v : *levi)
      if (!all.add(v.coords))
        throw LinearDependenceError("declared levi_part is dependent");
    for (const auto& v : *unip)
      if (!all.add(v.coords))
        throw LinearDependenceError(
            "declared unipotent_radical overlaps levi_part");
    if (all.size() != h.basis.size())
      throw DimensionMismatch("declared split does not span the subalgebra");
    for (const auto& v : all.basis())
      if (!span.contains(v))
        throw NotClosed(0, 0);  // split leaves the subalgebra
    if (!levi->empty()) detail::structure_in_basis(g, *levi);
    SpanBuilder uspan = detail::span_of(g, *unip);
    for (const auto& u : *unip) {
      if (!detail::is_ad_nilpotent(g, u))
        throw NotAlgebraicSubalgebra("declared unipotent_radical element " +
                                     to_string(u.coords) +
                                     " is not ad-nilpotent");
      for (const auto& b : h.basis)
        if (!uspan.contains(bracket(g, b, u).coords))
          throw NotClosed(0, 0);  // unip not an ideal
    }
    h.levi_part = std::move(levi);
    h.unipotent_radical = std::move(unip);
  }
  return h;
}

inline Subalgebra trivial_subalgebra(const LieAlgebra& g) {
  Subalgebra h;
  h.ambient = &g;
  return h;
}

inline Subalgebra full_subalgebra(const LieAlgebra& g) {
  std::vector<Element> basis;
  for (std::size_t i = 0; i < g.dim(); ++i) basis.push_back(g.basis_element(i));
  return make_subalgebra(g, std::move(basis));
}

/// Centralizer {z in g : [z, h] = 0 for all h in S}; bracket-closed.
inline Subalgebra centralizer(const LieAlgebra& g, const Subalgebra& s) {
  std::vector<QVec> rows;
  for (const auto& b : s.basis) {
    QMat adb = g.ad(b);
    for (std::size_t r = 0; r < g.dim(); ++r) rows.push_back(adb.row(r));
  }
  if (rows.empty()) return full_subalgebra(g);
  QMat sys = QMat::from_rows(rows);
  std::vector<Element> basis;
  for (auto& k : kernel(sys)) basis.emplace_back(std::move(k));
  return make_subalgebra(g, std::move(basis));
}

namespace detail {

/// Solvable radical of h via the ambient trace-form criterion:
/// rad(h) = h intersected with the Killing-orthogonal of [h, h].
inline std::vector<Element> solvable_radical(const LieAlgebra& g,
                                             const std::vector<Element>& hbasis) {
  SpanBuilder derived(g.dim());
  for (std::size_t i = 0; i < hbasis.size(); ++i)
    for (std::size_t j = i + 1; j < hbasis.size(); ++j)
      derived.add(bracket(g, hbasis[i], hbasis[j]).coords);
  std::vector<QVec> conditions;
  const QMat& k = g.killing_matrix();
  for (const auto& d : derived.basis()) {
    QVec row(g.dim(), Rat(0));
    for (std::size_t c = 0; c < g.dim(); ++c) row[c] = dot(k.row(c), d);
    conditions.push_back(std::move(row));
  }
  return cut_span(g, hbasis, conditions);
}

/// Derived span [V, V] of a list of vectors.
inline std::vector<Element> derived_span(const LieAlgebra& g,
                                         const std::vector<Element>& vecs) {
  SpanBuilder s(g.dim());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j)
      s.add(bracket(g, vecs[i], vecs[j]).coords);
  std::vector<Element> out;
  for (const auto& v : s.basis()) out.emplace_back(v);
  return out;
}

inline bool is_solvable(const LieAlgebra& g, std::vector<Element> vecs) {
  while (!vecs.empty()) {
    std::vector<Element> next = derived_span(g, vecs);
    if (next.size() >= vecs.size()) return false;
    vecs = std::move(next);
  }
  return true;
}

/// The set of ad-nilpotent elements of a solvable subalgebra r, computed as
/// the preimage of the Jacobson radical of the associative matrix algebra
/// generated by ad(r). Over a characteristic-0 field that radical is the
/// radical of the trace form on the associative algebra.
inline std::vector<Element> nilpotent_part_of_solvable(
    const LieAlgebra& g, const std::vector<Element>& rbasis) {
  if (rbasis.empty()) return {};
  const std::size_t n = g.dim();
  std::vector<QMat> assoc{QMat::identity(n)};
  SpanBuilder span(n * n);
  span.add(assoc[0].flatten());
  std::vector<QMat> gens;
  for (const auto& r : rbasis) {
    QMat m = g.ad(r);
    if (span.add(m.flatten())) assoc.push_back(m);
    gens.push_back(std::move(m));
  }
  // worklist closure under left multiplication by generators
  for (std::size_t i = 0; i < assoc.size(); ++i)
    for (const auto& gmat : gens) {
      QMat prod = gmat * assoc[i];
      if (span.add(prod.flatten())) assoc.push_back(std::move(prod));
    }
  // x in r is ad-nilpotent iff tr(ad x * a) = 0 for every a in the algebra
  QMat sys(assoc.size(), rbasis.size());
  for (std::size_t a = 0; a < assoc.size(); ++a)
    for (std::size_t c = 0; c < rbasis.size(); ++c)
      sys(a, c) = trace_product(g.ad(rbasis[c]), assoc[a]);
  std::vector<Element> out;
  for (const auto& k : kernel(sys)) {
    QVec v = zero_vector(n);
    for (std::size_t c = 0; c < rbasis.size(); ++c)
      if (sgn(k[c]) != 0) v = add(v, scale(k[c], rbasis[c].coords));
    out.emplace_back(std::move(v));
  }
  return out;
}

/// Picks representatives of a complement of `sub` inside `all`.
inline std::vector<Element> complement_in(const LieAlgebra& g,
                                          const std::vector<Element>& all,
                                          const std::vector<Element>& sub) {
  SpanBuilder s = span_of(g, sub);
  std::vector<Element> comp;
  for (const auto& v : all)
    if (s.add(v.coords)) comp.push_back(v);
  return comp;
}

/// One stage of the Levi construction: corrects the complement W of the
/// nilpotent ideal N so that it closes modulo [N, N]. Linear because the
/// quadratic correction term lands in [N, N].
inline std::optional<std::vector<Element>> split_stage(
    const LieAlgebra& g, const std::vector<Element>& w,
    const std::vector<Element>& nbasis, const SpanBuilder& n1span) {
  const std::size_t n = g.dim();
  const std::size_t p = w.size(), q = nbasis.size();
  if (p == 0) return std::vector<Element>{};

  // gamma: structure constants of the quotient on the w-representatives
  std::vector<QVec> mixed;
  for (const auto& v : w) mixed.push_back(v.coords);
  for (const auto& v : nbasis) mixed.push_back(v.coords);
  QMat sys = QMat::from_columns(mixed);
  std::vector<std::vector<QVec>> gamma(p, std::vector<QVec>(p));
  std::vector<std::vector<QVec>> resid(p, std::vector<QVec>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      auto coeff = solve(sys, bracket(g, w[i], w[j]).coords);
      if (!coeff) return std::nullopt;  // not even a subalgebra mod N
      gamma[i][j] = QVec(coeff->begin(), coeff->begin() + p);
      QVec rest = zero_vector(n);
      for (std::size_t t = 0; t < q; ++t)
        if (sgn((*coeff)[p + t]) != 0)
          rest = add(rest, scale((*coeff)[p + t], nbasis[t].coords));
      resid[i][j] = rest;  // the N-component of [w_i, w_j]
    }

  // unknowns: nu_i = sum_t x[i*q + t] n_t. Equations, for i < j:
  //   [nu_i, w_j] + [w_i, nu_j] - sum_k gamma_ij^k nu_k
  //     == -resid_ij   (mod [N, N])
  std::size_t unknowns = p * q;
  std::vector<QVec> rows;
  QVec rhs;
  std::vector<QMat> ad_w;
  for (const auto& v : w) ad_w.push_back(g.ad(v));
  std::vector<QMat> ad_n;
  for (const auto& v : nbasis) ad_n.push_back(g.ad(v));

  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      // coefficient of x[a*q+t] in the ambient-coordinate equation
      std::vector<QVec> cols(unknowns, zero_vector(n));
      for (std::size_t t = 0; t < q; ++t) {
        // [n_t, w_j] term for nu_i
        cols[i * q + t] = add(cols[i * q + t],
                              scale(Rat(-1), ad_w[j] * nbasis[t].coords));
        // [w_i, n_t] term for nu_j
        cols[j * q + t] = add(cols[j * q + t], ad_w[i] * nbasis[t].coords);
      }
      for (std::size_t kk = 0; kk < p; ++kk) {
        if (sgn(gamma[i][j][kk]) == 0) continue;
        for (std::size_t t = 0; t < q; ++t)
          cols[kk * q + t] = add(
              cols[kk * q + t], scale(-gamma[i][j][kk], nbasis[t].coords));
      }
      QVec target = scale(Rat(-1), resid[i][j]);
      // project the equation modulo span([N, N])
      std::vector<QVec> reduced_cols;
      for (auto& c : cols) reduced_cols.push_back(n1span.reduce(c));
      QVec reduced_target = n1span.reduce(target);
      for (std::size_t r = 0; r < n; ++r) {
        QVec row(unknowns, Rat(0));
        bool nonzero = false;
        for (std::size_t u = 0; u < unknowns; ++u) {
          row[u] = reduced_cols[u][r];
          nonzero = nonzero || sgn(row[u]) != 0;
        }
        if (!nonzero && sgn(reduced_target[r]) == 0) continue;
        rows.push_back(std::move(row));
        rhs.push_back(reduced_target[r]);
      }
    }

  QVec x(unknowns, Rat(0));
  if (!rows.empty()) {
    auto sol = solve(QMat::from_rows(rows), rhs);
    if (!sol) return std::nullopt;
    x = *sol;
  }
  std::vector<Element> corrected;
  for (std::size_t i = 0; i < p; ++i) {
    QVec v = w[i].coords;
    for (std::size_t t = 0; t < q; ++t)
      if (sgn(x[i * q + t]) != 0)
        v = add(v, scale(x[i * q + t], nbasis[t].coords));
    corrected.emplace_back(std::move(v));
  }
  return corrected;
}

}  // namespace detail

struct LeviDecomposition {
  Subalgebra levi;
  Subalgebra unip;
};

/// Splits h into a reductive part and the nilpotent ideal of its radical.
/// A declared split on h is validated by make_subalgebra and returned as-is.
/// Raises NotAlgebraicSubalgebra when no rational bracket-closed complement
/// of the nilpotent ideal exists.
inline LeviDecomposition levi_decomposition(const LieAlgebra& g,
                                            const Subalgebra& h) {
  LeviDecomposition out;
  if (h.levi_part) {
    // the declared unipotent radical must be exactly the nilpotent part of
    // the radical, otherwise the declaration describes a different group
    std::vector<Element> rad = detail::solvable_radical(g, h.basis);
    std::vector<Element> nil = detail::nilpotent_part_of_solvable(g, rad);
    SpanBuilder nspan = detail::span_of(g, nil);
    SpanBuilder dspan = detail::span_of(g, *h.unipotent_radical);
    bool equal = nspan.size() == dspan.size();
    for (const auto& u : *h.unipotent_radical)
      equal = equal && nspan.contains(u.coords);
    if (!equal)
      throw NotAlgebraicSubalgebra(
          "declared unipotent_radical does not match the nilpotent part of "
          "the radical");
    out.levi = make_subalgebra(g, *h.levi_part);
    out.unip.ambient = &g;
    out.unip.basis = *h.unipotent_radical;
    return out;
  }
  if (h.basis.empty()) {
    out.levi = trivial_subalgebra(g);
    out.unip = trivial_subalgebra(g);
    return out;
  }

  std::vector<Element> rad = detail::solvable_radical(g, h.basis);
  if (!detail::is_solvable(g, rad))
    throw NotAlgebraicSubalgebra("computed radical is not solvable");
  std::vector<Element> nil = detail::nilpotent_part_of_solvable(g, rad);
  for (const auto& x : nil)
    if (!detail::is_ad_nilpotent(g, x))
      throw NotAlgebraicSubalgebra("nilpotent ideal candidate " +
                                   to_string(x.coords) + " is not nilpotent");

  if (nil.empty()) {
    out.levi = make_subalgebra(g, h.basis);
    out.unip = trivial_subalgebra(g);
    return out;
  }

  // staged correction along the derived series of the nilpotent ideal
  std::vector<Element> current = detail::complement_in(g, h.basis, nil);
  std::vector<Element> ncur = nil;
  while (!ncur.empty()) {
    std::vector<Element> n1 = detail::derived_span(g, ncur);
    SpanBuilder n1span = detail::span_of(g, n1);
    auto corrected = detail::split_stage(g, current, ncur, n1span);
    if (!corrected)
      throw NotAlgebraicSubalgebra("splitting system infeasible at level " +
                                   std::to_string(n1.size()));
    current = *corrected;
    ncur = std::move(n1);
  }

  // validate the result
  SpanBuilder lspan = detail::span_of(g, current);
  SpanBuilder uspan = detail::span_of(g, nil);
  SpanBuilder total(g.dim());
  for (const auto& v : current) total.add(v.coords);
  for (const auto& v : nil) total.add(v.coords);
  if (total.size() != h.basis.size() ||
      lspan.size() + uspan.size() != h.basis.size())
    throw NotAlgebraicSubalgebra("complement does not split the subalgebra");
  for (const auto& b : h.basis)
    for (const auto& u : nil)
      if (!uspan.contains(bracket(g, b, u).coords))
        throw NotAlgebraicSubalgebra("nilpotent part is not an ideal");
  out.levi = make_subalgebra(g, current);  // throws NotClosed if the stage lied
  out.unip.ambient = &g;
  out.unip.basis = nil;
  return out;
}

/// True iff the subalgebra has trivial unipotent part.
inline bool is_reductive(const LieAlgebra& g, const Subalgebra& h) {
  return levi_decomposition(g, h).unip.basis.empty();
}

}  // namespace orbitcert

#endif
