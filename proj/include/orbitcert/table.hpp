#ifndef ORBITCERT_TABLE_HPP
#define ORBITCERT_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitcert/lie_algebra.hpp"
#include "orbitcert/subalgebra.hpp"

namespace orbitcert {

inline constexpr const char* kOvergroupTableVersion = "1";

/// A conjugacy-class representative of a maximal proper reductive subalgebra,
/// together with its membership pattern.
struct OvergroupRep {
  std::string name;
  bool toral = false;  // consists of semisimple elements only
  std::vector<Element> basis;
};

struct OvergroupTable {
  std::string algebra;
  std::vector<OvergroupRep> reps;
};

namespace detail {

inline Element from_matrix_or_throw(const LieAlgebra& g, const QMat& m) {
  auto e = element_from_matrix(g, m);
  if (!e) throw Error("internal: table matrix outside the algebra");
  return *e;
}

inline QMat diag_matrix(std::size_t n, const std::vector<long>& d) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(d[i]);
  return m;
}

inline QMat unit(std::size_t n, int i, int j) {
  QMat m(n, n);
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return m;
}

}  // namespace detail

/// The built-in table of maximal proper reductive subalgebra representatives
/// for the shipped classical constructors. Returns nothing for untabulated
/// algebras; consumers must then answer Unknown.
inline std::optional<OvergroupTable> overgroup_table(const LieAlgebra& g) {
  using detail::diag_matrix;
  using detail::from_matrix_or_throw;
  using detail::unit;
  if (!g.classical_id()) return std::nullopt;
  auto [family, n] = *g.classical_id();
  OvergroupTable table;
  auto mk = [&](const std::string& name, bool toral,
                const std::vector<QMat>& mats) {
    OvergroupRep rep;
    rep.name = name;
    rep.toral = toral;
    for (const auto& m : mats) rep.basis.push_back(from_matrix_or_throw(g, m));
    table.reps.push_back(std::move(rep));
  };

  if (family == ClassicalFamily::sl && n == 2) {
    table.algebra = "sl2";
    mk("maximal torus", true, {diag_matrix(2, {1, -1})});
  } else if (family == ClassicalFamily::sl && n == 3) {
    table.algebra = "sl3";
    mk("gl2 block Levi", false,
       {unit(3, 0, 1), unit(3, 1, 0), diag_matrix(3, {1, -1, 0}),
        diag_matrix(3, {1, 1, -2})});
    // principal three-dimensional subalgebra (split form)
    mk("principal sl2", false,
       {diag_matrix(3, {2, 0, -2}),
        unit(3, 0, 1) + unit(3, 1, 2),
        (unit(3, 1, 0) + unit(3, 2, 1)).scaled(Rat(2))});
  } else if (family == ClassicalFamily::sl && n == 4) {
    table.algebra = "sl4";
    mk("gl3 block Levi", false,
       {unit(4, 0, 1), unit(4, 0, 2), unit(4, 1, 2), unit(4, 1, 0),
        unit(4, 2, 0), unit(4, 2, 1), diag_matrix(4, {1, -1, 0, 0}),
        diag_matrix(4, {0, 1, -1, 0}), diag_matrix(4, {1, 1, 1, -3})});
    mk("gl2 + gl2 block Levi", false,
       {unit(4, 0, 1), unit(4, 1, 0), diag_matrix(4, {1, -1, 0, 0}),
        unit(4, 2, 3), unit(4, 3, 2), diag_matrix(4, {0, 0, 1, -1}),
        diag_matrix(4, {1, 1, -1, -1})});
    {
      // sp4: X^T J + J X = 0 for J = [[0, I], [-I, 0]]
      std::vector<QMat> mats;
      auto sp4 = make_classical(ClassicalFamily::sp, 4);
      for (const auto& m : sp4.defining_matrices()) mats.push_back(m);
      mk("sp4 symplectic", false, mats);
    }
    {
      // so4 in the split antidiagonal form
      std::vector<QMat> mats;
      auto so4 = make_classical(ClassicalFamily::so, 4);
      for (const auto& m : so4.defining_matrices()) mats.push_back(m);
      mk("so4 orthogonal", false, mats);
    }
  } else if (family == ClassicalFamily::sp && n == 4) {
    table.algebra = "sp4";
    mk("sp2 + sp2", false,
       {diag_matrix(4, {1, 0, -1, 0}), unit(4, 0, 2).scaled(Rat(2)),
        unit(4, 2, 0).scaled(Rat(2)), diag_matrix(4, {0, 1, 0, -1}),
        unit(4, 1, 3).scaled(Rat(2)), unit(4, 3, 1).scaled(Rat(2))});
    mk("gl2 Siegel Levi", false,
       {unit(4, 0, 1) - unit(4, 3, 2), unit(4, 1, 0) - unit(4, 2, 3),
        diag_matrix(4, {1, 0, -1, 0}), diag_matrix(4, {0, 1, 0, -1})});
    {
      QMat h = diag_matrix(4, {3, 1, -3, -1});
      QMat e = (unit(4, 0, 1) - unit(4, 3, 2)) + unit(4, 1, 3).scaled(Rat(2));
      QMat f = (unit(4, 1, 0) - unit(4, 2, 3)).scaled(Rat(3)) +
               unit(4, 3, 1).scaled(Rat(2));
      // normalize f so that [e, f] = h
      QMat br = e * f - f * e;
      if (!(br == h)) {
        // solve [e, x f1 + y f2] = h in the two lowering directions
        QMat f1 = unit(4, 1, 0) - unit(4, 2, 3);
        QMat f2 = unit(4, 3, 1).scaled(Rat(2));
        QMat b1 = e * f1 - f1 * e, b2 = e * f2 - f2 * e;
        QMat sys = QMat::from_columns({b1.flatten(), b2.flatten()});
        auto sol = solve(sys, h.flatten());
        f = f1.scaled((*sol)[0]) + f2.scaled((*sol)[1]);
      }
      mk("principal sl2", false, {h, e, f});
    }
  } else if (family == ClassicalFamily::so && n == 5) {
    table.algebra = "so5";
    {
      // so4 fixing the middle anisotropic line
      std::vector<QMat> mats;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          if (i == 2 || j == 2 || i + j >= 4) continue;
          QMat m = unit(5, i, j);
          m(4 - j, 4 - i) -= 1;
          mats.push_back(m);
        }
      mk("so4 orthogonal", false, mats);
    }
    mk("gl2 isotropic-plane Levi", false,
       {unit(5, 0, 1) - unit(5, 3, 4), unit(5, 1, 0) - unit(5, 4, 3),
        diag_matrix(5, {1, -1, 0, 1, -1}), diag_matrix(5, {1, 1, 0, -1, -1})});
    {
      QMat h = diag_matrix(5, {4, 2, 0, -2, -4});
      QMat e = unit(5, 0, 1) + unit(5, 1, 2) - unit(5, 2, 3) - unit(5, 3, 4);
      QMat f = unit(5, 1, 0).scaled(Rat(4)) + unit(5, 2, 1).scaled(Rat(6)) -
               unit(5, 3, 2).scaled(Rat(6)) - unit(5, 4, 3).scaled(Rat(4));
      mk("principal so3", false, {h, e, f});
    }
  } else {
    return std::nullopt;
  }
  return table;
}

}  // namespace orbitcert

#endif
