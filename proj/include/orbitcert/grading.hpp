#ifndef ORBITCERT_GRADING_HPP
#define ORBITCERT_GRADING_HPP

#include <map>
#include <vector>

#include "orbitcert/qpolynomial.hpp"
#include "orbitcert/subalgebra.hpp"

namespace orbitcert {

/// Verifies that ad(s) is diagonalizable with rational eigenvalues and
/// returns the distinct eigenvalues, ascending.
inline std::vector<Rat> verify_rational_semisimple(const LieAlgebra& g,
                                                   const Element& s) {
  QMat a = g.ad(s);
  QVec chi = char_poly(a);
  QVec sf = qpoly::squarefree_part(chi);
  qpoly::RationalRoots rr = qpoly::rational_roots(sf);
  if (qpoly::degree(rr.residual) >= 1)
    throw IrrationalEigenvalue(
        "characteristic polynomial of ad s has an irreducible factor of "
        "degree " +
        std::to_string(qpoly::degree(rr.residual)) + " over Q");
  std::size_t total = 0;
  for (const auto& lam : rr.roots) {
    QMat shifted = a;
    for (std::size_t i = 0; i < g.dim(); ++i) shifted(i, i) -= lam;
    total += kernel(shifted).size();
  }
  if (total != g.dim())
    throw NotSemisimple("geometric multiplicities sum to " +
                        std::to_string(total) + " < " +
                        std::to_string(g.dim()) +
                        " (minimal polynomial has a repeated root)");
  return rr.roots;
}

/// Eigenspace decomposition of g under ad(s) for a rational semisimple s,
/// with the nonnegative part p, its trace-orthogonal slice q and the strictly
/// positive part n.
struct RationalGrading {
  Element s;
  std::map<Rat, std::vector<Element>> pieces;  // ascending eigenvalue
  std::vector<Element> p_basis;
  std::vector<Element> q_basis;
  std::vector<Element> n_basis;

  const std::vector<Element>* piece(const Rat& eig) const {
    auto it = pieces.find(eig);
    return it == pieces.end() ? nullptr : &it->second;
  }
};

inline RationalGrading grade(const LieAlgebra& g, const Element& s) {
  std::vector<Rat> eigs = verify_rational_semisimple(g, s);
  RationalGrading out;
  out.s = s;
  QMat a = g.ad(s);
  for (const auto& lam : eigs) {
    QMat shifted = a;
    for (std::size_t i = 0; i < g.dim(); ++i) shifted(i, i) -= lam;
    std::vector<Element> piece;
    for (auto& k : kernel(shifted)) piece.emplace_back(std::move(k));
    out.pieces.emplace(lam, std::move(piece));
  }
  // p = nonnegative part, n = strictly positive part
  for (const auto& [lam, piece] : out.pieces) {
    if (sgn(lam) < 0) continue;
    for (const auto& v : piece) {
      out.p_basis.push_back(v);
      if (sgn(lam) > 0) out.n_basis.push_back(v);
    }
  }
  // q: zero piece cut by (x, s) = 0, then everything of positive weight. The
  // positive pieces are automatically Killing-orthogonal to s.
  auto it = out.pieces.find(Rat(0));
  if (it != out.pieces.end()) {
    QVec functional(g.dim(), Rat(0));
    const QMat& k = g.killing_matrix();
    for (std::size_t c = 0; c < g.dim(); ++c)
      functional[c] = dot(k.row(c), s.coords);
    for (const auto& v :
         detail::cut_span(g, it->second, {functional}))
      out.q_basis.push_back(v);
  }
  for (const auto& v : out.n_basis) out.q_basis.push_back(v);
  return out;
}

/// Per-condition report of Sukhanov's containment test.
struct SukhanovReport {
  bool h_in_q = false;
  bool ru_in_n = false;
  bool ok() const { return h_in_q && ru_in_n; }
};

/// Checks lie(h) inside q_s and lie(R_u(h)) inside n_s for the grading by s.
/// h must split; an undeclared split is computed on the fly.
inline SukhanovReport sukhanov_certificate_check(const LieAlgebra& g,
                                                 const Subalgebra& h,
                                                 const Element& s) {
  RationalGrading gr = grade(g, s);
  std::vector<Element> ru;
  if (h.unipotent_radical) {
    ru = *h.unipotent_radical;
  } else {
    ru = levi_decomposition(g, h).unip.basis;
  }
  SukhanovReport rep;
  SpanBuilder qspan = detail::span_of(g, gr.q_basis);
  rep.h_in_q = true;
  for (const auto& b : h.basis)
    if (!qspan.contains(b.coords)) {
      rep.h_in_q = false;
      break;
    }
  SpanBuilder nspan = detail::span_of(g, gr.n_basis);
  rep.ru_in_n = true;
  for (const auto& u : ru)
    if (!nspan.contains(u.coords)) {
      rep.ru_in_n = false;
      break;
    }
  return rep;
}

}  // namespace orbitcert

#endif
