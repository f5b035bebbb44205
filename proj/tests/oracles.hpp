#ifndef ORBITCERT_TESTS_ORACLES_HPP
#define ORBITCERT_TESTS_ORACLES_HPP

// Test-side oracles, independent of the decision paths they cross-check.

#include <optional>
#include <vector>

#include "orbitcert/orbitcert.hpp"

namespace oracles {

using namespace orbitcert;

/// Diagonal Cartan basis elements of a classical algebra (the basis vectors
/// whose defining matrices are diagonal).
inline std::vector<Element> standard_cartan(const LieAlgebra& g) {
  std::vector<Element> out;
  const auto& mats = g.defining_matrices();
  for (std::size_t b = 0; b < mats.size(); ++b) {
    bool diag = true;
    for (std::size_t i = 0; i < mats[b].rows() && diag; ++i)
      for (std::size_t j = 0; j < mats[b].cols() && diag; ++j)
        if (i != j && sgn(mats[b](i, j)) != 0) diag = false;
    if (diag) out.push_back(g.basis_element(b));
  }
  return out;
}

/// Brute-force Sukhanov search: tries s = sum lambda_j t_j for integer lambda
/// in [-3,3]^rank over the standard Cartan, composed with the supplied
/// conjugations exp(ad u). Returns a certifying s if one is found.
inline std::optional<Element> sukhanov_search(
    const LieAlgebra& g, const Subalgebra& h,
    const std::vector<Element>& conjugators) {
  std::vector<Element> cartan = standard_cartan(g);
  std::vector<QMat> maps{QMat::identity(g.dim())};
  for (const auto& u : conjugators) maps.push_back(exp_ad_nilpotent(g, u));

  std::size_t rank = cartan.size();
  std::vector<int> lambda(rank, -3);
  while (true) {
    QVec s = zero_vector(g.dim());
    for (std::size_t j = 0; j < rank; ++j)
      if (lambda[j] != 0) s = add(s, scale(Rat(lambda[j]), cartan[j].coords));
    for (const auto& m : maps) {
      Element cand(m * s);
      SukhanovReport rep = sukhanov_certificate_check(g, h, cand);
      if (rep.ok()) return cand;
    }
    std::size_t j = 0;
    while (j < rank && lambda[j] == 3) lambda[j++] = -3;
    if (j == rank) break;
    ++lambda[j];
  }
  return std::nullopt;
}

/// Exhaustive integer search for a destabilizing lambda in [-B, B]^d.
inline bool box_instability(const std::vector<QVec>& weights, std::size_t d,
                            int B = 5) {
  if (weights.empty()) return true;  // zero vector destabilizes trivially
  std::vector<int> lambda(d, -B);
  while (true) {
    bool all_pos = true;
    for (const auto& w : weights) {
      Rat p = 0;
      for (std::size_t j = 0; j < d; ++j) p += w[j] * Rat(lambda[j]);
      if (sgn(p) <= 0) {
        all_pos = false;
        break;
      }
    }
    if (all_pos) return true;
    std::size_t j = 0;
    while (j < d && lambda[j] == B) lambda[j++] = -B;
    if (j == d) return false;
    ++lambda[j];
  }
}

/// Exhaustive integer search for a closedness-breaking lambda in [-B, B]^d:
/// all pairings nonnegative, at least one positive.
inline bool box_nonclosed_witness(const std::vector<QVec>& weights,
                                  std::size_t d, int B = 5) {
  if (weights.empty()) return false;
  std::vector<int> lambda(d, -B);
  while (true) {
    bool nonneg = true, some_pos = false;
    for (const auto& w : weights) {
      Rat p = 0;
      for (std::size_t j = 0; j < d; ++j) p += w[j] * Rat(lambda[j]);
      int sg = sgn(p);
      if (sg < 0) {
        nonneg = false;
        break;
      }
      some_pos = some_pos || sg > 0;
    }
    if (nonneg && some_pos) return true;
    std::size_t j = 0;
    while (j < d && lambda[j] == B) lambda[j++] = -B;
    if (j == d) return false;
    ++lambda[j];
  }
}

/// Random weight systems for the LP-vs-lattice comparison.
struct WeightSystem {
  std::size_t d;
  std::vector<QVec> weights;
};

// Entries stay in [-1, 1]: for that family an exhaustive sweep over all
// systems (d <= 3, k <= 5) confirms the [-5, 5] box decides feasibility, so
// the lattice search below is a genuine oracle.
inline WeightSystem random_weight_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim_pick(1, 3);
  std::uniform_int_distribution<std::size_t> count_pick(1, 5);
  std::uniform_int_distribution<int> entry(-1, 1);
  WeightSystem ws;
  ws.d = dim_pick(rng);
  std::size_t k = count_pick(rng);
  for (std::size_t i = 0; i < k; ++i) {
    QVec w(ws.d);
    for (std::size_t j = 0; j < ws.d; ++j) w[j] = Rat(entry(rng));
    bool dup = false;
    for (const auto& other : ws.weights) dup = dup || other == w;
    if (!dup) ws.weights.push_back(std::move(w));
  }
  return ws;
}

/// Wraps a raw weight list as a WeightSupport over a synthetic torus of the
/// right rank (the LP layer only reads weights and rank).
inline WeightSupport synthetic_support(const LieAlgebra& g,
                                       const std::vector<QVec>& weights,
                                       std::size_t d) {
  WeightSupport ws;
  for (std::size_t j = 0; j < d; ++j) ws.torus_basis.push_back(g.zero());
  ws.weights = weights;
  ws.domain_size = 0;
  return ws;
}

}  // namespace oracles

#endif
