#ifndef ORBITCERT_HOMVECTOR_HPP
#define ORBITCERT_HOMVECTOR_HPP

#include <algorithm>
#include <vector>

#include "orbitcert/grading.hpp"
#include "orbitcert/subalgebra.hpp"

namespace orbitcert {

/// A point of Hom(lie R_u(H), g): one image per domain basis vector. The
/// group acts on the target copy of g only; the domain is a fixed space.
struct HomVector {
  const LieAlgebra* ambient = nullptr;
  std::vector<Element> domain_basis;
  std::vector<Element> images;

  std::size_t columns() const { return images.size(); }

  bool is_zero() const {
    for (const auto& x : images)
      if (!x.is_zero()) return false;
    return true;
  }
};

/// The canonical inclusion vector: images equal the domain basis.
inline HomVector hom_vector(const LieAlgebra& g, const Subalgebra& ru) {
  HomVector v;
  v.ambient = &g;
  v.domain_basis = ru.basis;
  v.images = ru.basis;
  return v;
}

/// Decomposition of a HomVector into simultaneous ad-eigencomponents of a
/// commuting family of rational semisimple elements. Weights are sorted
/// lexicographically; components are the nonzero projections.
struct WeightSupport {
  std::vector<Element> torus_basis;
  std::vector<QVec> weights;
  std::vector<std::vector<Element>> component_images;  // per weight, per column
  std::size_t domain_size = 0;

  std::size_t size() const { return weights.size(); }
};

inline WeightSupport weight_support(const HomVector& v,
                                    const std::vector<Element>& torus) {
  const LieAlgebra& g = *v.ambient;
  for (std::size_t a = 0; a < torus.size(); ++a)
    for (std::size_t b = a + 1; b < torus.size(); ++b)
      if (!bracket(g, torus[a], torus[b]).is_zero())
        throw NonCommutingTorus(static_cast<int>(a), static_cast<int>(b));
  for (const auto& t : torus) verify_rational_semisimple(g, t);

  WeightSupport ws;
  ws.torus_basis = torus;
  ws.domain_size = v.columns();

  // refine the full space into simultaneous eigenspaces
  struct Piece {
    QVec weight;
    std::vector<Element> basis;
  };
  std::vector<Piece> pieces{{QVec{}, {}}};
  for (std::size_t i = 0; i < g.dim(); ++i)
    pieces[0].basis.push_back(g.basis_element(i));
  for (const auto& t : torus) {
    QMat at = g.ad(t);
    std::vector<Piece> refined;
    for (auto& piece : pieces) {
      // eigenvalues of ad(t) restricted to the piece
      std::vector<QVec> cols;
      for (const auto& b : piece.basis) cols.push_back(b.coords);
      QMat sys = QMat::from_columns(cols);
      // restriction matrix: solve ad(t) b_k in terms of piece basis
      QMat restr(piece.basis.size(), piece.basis.size());
      for (std::size_t k = 0; k < piece.basis.size(); ++k) {
        auto coeff = solve(sys, at * piece.basis[k].coords);
        // invariance holds because the torus commutes
        for (std::size_t r = 0; r < piece.basis.size(); ++r)
          restr(r, k) = (*coeff)[r];
      }
      QVec chi = char_poly(restr);
      auto roots = qpoly::rational_roots(qpoly::squarefree_part(chi)).roots;
      for (const auto& lam : roots) {
        QMat shifted = restr;
        for (std::size_t i = 0; i < restr.rows(); ++i) shifted(i, i) -= lam;
        Piece sub;
        sub.weight = piece.weight;
        sub.weight.push_back(lam);
        for (const auto& k : kernel(shifted)) {
          QVec vec = zero_vector(g.dim());
          for (std::size_t c = 0; c < piece.basis.size(); ++c)
            if (sgn(k[c]) != 0)
              vec = add(vec, scale(k[c], piece.basis[c].coords));
          sub.basis.emplace_back(std::move(vec));
        }
        if (!sub.basis.empty()) refined.push_back(std::move(sub));
      }
    }
    pieces = std::move(refined);
  }

  // project every image column onto each piece
  std::vector<QVec> allcols;
  std::vector<std::pair<std::size_t, std::size_t>> owner;  // piece, index
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (std::size_t b = 0; b < pieces[p].basis.size(); ++b) {
      allcols.push_back(pieces[p].basis[b].coords);
      owner.emplace_back(p, b);
    }
  QMat full = QMat::from_columns(allcols);
  std::vector<std::pair<QVec, std::vector<Element>>> found;
  for (std::size_t p = 0; p < pieces.size(); ++p)
    found.emplace_back(pieces[p].weight,
                       std::vector<Element>(v.columns(), Element(zero_vector(g.dim()))));
  for (std::size_t col = 0; col < v.columns(); ++col) {
    auto coeff = solve(full, v.images[col].coords);
    for (std::size_t t = 0; t < allcols.size(); ++t) {
      if (sgn((*coeff)[t]) == 0) continue;
      auto [p, b] = owner[t];
      found[p].second[col].coords = add(
          found[p].second[col].coords,
          scale((*coeff)[t], pieces[p].basis[b].coords));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [w, comps] : found) {
    bool nonzero = false;
    for (const auto& c : comps) nonzero = nonzero || !c.is_zero();
    if (!nonzero) continue;
    ws.weights.push_back(w);
    ws.component_images.push_back(comps);
  }
  return ws;
}

/// Exact exponential exp(ad u) for ad-nilpotent u, as a matrix on ambient
/// coordinates. Throws if ad u is not nilpotent.
inline QMat exp_ad_nilpotent(const LieAlgebra& g, const Element& u) {
  QMat a = g.ad(u);
  if (!is_nilpotent_matrix(a))
    throw UnsupportedParameter("exp(ad u) requested for non-nilpotent u");
  QMat out = QMat::identity(g.dim());
  QMat term = QMat::identity(g.dim());
  Rat factorial = 1;
  for (std::size_t k = 1; k <= g.dim(); ++k) {
    term = term * a;
    if (term.is_zero()) break;
    factorial *= Rat(static_cast<long>(k));
    out = out + term.scaled(1 / factorial);
  }
  return out;
}

/// Applies a coordinate transformation to the target of every image column.
inline HomVector apply_to_images(const HomVector& v, const QMat& m) {
  HomVector out = v;
  for (auto& x : out.images) x.coords = m * x.coords;
  return out;
}

}  // namespace orbitcert

#endif
