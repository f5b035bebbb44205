#ifndef ORBITCERT_LIE_ALGEBRA_HPP
#define ORBITCERT_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orbitcert/errors.hpp"
#include "orbitcert/qmatrix.hpp"
#include "orbitcert/rational.hpp"

namespace orbitcert {

/// A vector of the ambient Lie algebra, in basis coordinates.
struct Element {
  QVec coords;

  Element() = default;
  explicit Element(QVec c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const { return orbitcert::is_zero(coords); }
};

struct StructureEntry {
  int k, i, j;
  Rat c;  // [b_i, b_j] has coefficient c on b_k
};

enum class ClassicalFamily { sl, so, sp };

struct ClassicalId {
  ClassicalFamily family;
  int n;
};

/// Semisimple Lie algebra over the rationals, presented by structure
/// constants. Construction validates antisymmetry, the Jacobi identity and
/// nondegeneracy of the Killing form; ad-matrices and the Killing matrix are
/// cached and never mutated afterwards, so instances are safe to share
/// across threads for reading.
class LieAlgebra {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<StructureEntry>& structure_constants() const {
    return entries_;
  }
  const QMat& killing_matrix() const { return killing_; }
  const QMat& ad_basis(std::size_t i) const { return ad_[i]; }

  /// Recorded origin when built by make_classical; custom tables have none.
  const std::optional<ClassicalId>& classical_id() const { return classical_; }

  /// Matrices of the defining representation when built by make_classical.
  const std::vector<QMat>& defining_matrices() const { return defining_; }

  Element element(QVec coords) const {
    if (coords.size() != dim_)
      throw DimensionMismatch("element has " + std::to_string(coords.size()) +
                              " coordinates, algebra has dimension " +
                              std::to_string(dim_));
    return Element(std::move(coords));
  }

  Element zero() const { return Element(zero_vector(dim_)); }

  Element basis_element(std::size_t i) const {
    QVec c = zero_vector(dim_);
    c[i] = 1;
    return Element(std::move(c));
  }

  /// Matrix of ad(x) acting on coordinate columns.
  QMat ad(const Element& x) const {
    check_dim(x);
    QMat m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x.coords[i]) == 0) continue;
      const QMat& adi = ad_[i];
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
          if (sgn(adi(r, c)) != 0) m(r, c) += x.coords[i] * adi(r, c);
    }
    return m;
  }

  friend LieAlgebra make_lie_algebra(const std::vector<StructureEntry>&,
                                     std::vector<std::string>);
  friend LieAlgebra make_classical(ClassicalFamily, int);

 private:
  void check_dim(const Element& x) const {
    if (x.coords.size() != dim_)
      throw DimensionMismatch("element dimension " +
                              std::to_string(x.coords.size()) +
                              " vs algebra dimension " + std::to_string(dim_));
  }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<StructureEntry> entries_;
  std::vector<QMat> ad_;  // ad of each basis vector
  QMat killing_;
  std::optional<ClassicalId> classical_;
  std::vector<QMat> defining_;
};

inline Element bracket(const LieAlgebra& g, const Element& x,
                       const Element& y) {
  if (x.coords.size() != g.dim() || y.coords.size() != g.dim())
    throw DimensionMismatch("bracket operands");
  return Element(g.ad(x) * y.coords);
}

inline Rat killing_pair(const LieAlgebra& g, const Element& x,
                        const Element& y) {
  if (x.coords.size() != g.dim() || y.coords.size() != g.dim())
    throw DimensionMismatch("killing_pair operands");
  Rat s = 0;
  const QMat& k = g.killing_matrix();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (sgn(x.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (sgn(y.coords[j]) != 0 && sgn(k(i, j)) != 0)
        s += x.coords[i] * k(i, j) * y.coords[j];
  }
  return s;
}

/// Builds and validates a Lie algebra from a sparse structure-constant table.
inline LieAlgebra make_lie_algebra(const std::vector<StructureEntry>& entries,
                                   std::vector<std::string> labels) {
  LieAlgebra g;
  g.dim_ = labels.size();
  if (g.dim_ == 0) throw UnsupportedParameter("zero-dimensional algebra");
  const long n = static_cast<long>(g.dim_);
  for (const auto& e : entries)
    if (e.k < 0 || e.k >= n || e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
      throw DimensionMismatch("structure constant index out of range: [" +
                              std::to_string(e.k) + "][" + std::to_string(e.i) +
                              "][" + std::to_string(e.j) + "]");
  g.labels_ = std::move(labels);
  g.entries_ = entries;

  // dense ad tables (dim < 64 is the intended working range; the sparse
  // entries stay available on the instance either way)
  g.ad_.assign(g.dim_, QMat(g.dim_, g.dim_));
  for (const auto& e : entries) g.ad_[e.i](e.k, e.j) += e.c;

  // antisymmetry: ad_i col j == -(ad_j col i)
  for (std::size_t i = 0; i < g.dim_; ++i)
    for (std::size_t j = i; j < g.dim_; ++j)
      for (std::size_t k = 0; k < g.dim_; ++k)
        if (g.ad_[i](k, j) != -g.ad_[j](k, i))
          throw AntisymmetryViolation(static_cast<int>(i), static_cast<int>(j),
                                      static_cast<int>(k));

  // Jacobi in the form ad([b_i,b_j]) == [ad b_i, ad b_j]
  for (std::size_t i = 0; i < g.dim_; ++i)
    for (std::size_t j = i + 1; j < g.dim_; ++j) {
      QVec bij = g.ad_[i].column(j);  // coordinates of [b_i, b_j]
      QMat lhs(g.dim_, g.dim_);
      for (std::size_t t = 0; t < g.dim_; ++t)
        if (sgn(bij[t]) != 0) lhs = lhs + g.ad_[t].scaled(bij[t]);
      QMat rhs = g.ad_[i] * g.ad_[j] - g.ad_[j] * g.ad_[i];
      if (!(lhs == rhs)) {
        std::size_t k = 0;
        while (lhs.column(k) == rhs.column(k)) ++k;
        throw JacobiViolation(static_cast<int>(i), static_cast<int>(j),
                              static_cast<int>(k));
      }
    }

  g.killing_ = QMat(g.dim_, g.dim_);
  for (std::size_t i = 0; i < g.dim_; ++i)
    for (std::size_t j = i; j < g.dim_; ++j) {
      Rat t = trace_product(g.ad_[i], g.ad_[j]);
      g.killing_(i, j) = t;
      g.killing_(j, i) = t;
    }
  if (rank(g.killing_) != g.dim_) {
    // name a witness basis vector in the radical of the form
    auto ker = kernel(g.killing_);
    std::string w = ker.empty() ? "?" : to_string(ker.front());
    throw DegenerateKillingForm("kernel contains " + w);
  }
  return g;
}

namespace detail {

/// Expresses each bracket of the given matrices in their own span and returns
/// the structure-constant table. Throws if the span is not bracket-closed.
inline std::vector<StructureEntry> structure_from_matrices(
    const std::vector<QMat>& basis) {
  std::vector<QVec> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  QMat sys = QMat::from_columns(flat);
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      QMat br = basis[i] * basis[j] - basis[j] * basis[i];
      auto coeff = solve(sys, br.flatten());
      if (!coeff)
        throw NotClosed(static_cast<int>(i), static_cast<int>(j));
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn((*coeff)[k]) != 0)
          entries.push_back({static_cast<int>(k), static_cast<int>(i),
                             static_cast<int>(j), (*coeff)[k]});
    }
  return entries;
}

inline QMat unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  QMat m(n, n);
  m(r, c) = 1;
  return m;
}

}  // namespace detail

/// Constructs sl_n, so_n (split antidiagonal form) or sp_n (n even, split
/// symplectic form) from its defining matrix representation. Basis labels are
/// elementary-matrix style names.
inline LieAlgebra make_classical(ClassicalFamily family, int n) {
  std::vector<QMat> basis;
  std::vector<std::string> labels;
  auto idx = [](int a, int b) {
    return std::to_string(a + 1) + std::to_string(b + 1);
  };
  const std::size_t N = static_cast<std::size_t>(n);
  switch (family) {
    case ClassicalFamily::sl: {
      if (n < 2) throw UnsupportedParameter("sl requires n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis.push_back(detail::unit_matrix(N, i, j));
          labels.push_back("E" + idx(i, j));
        }
      for (int i = 0; i + 1 < n; ++i) {
        QMat h(N, N);
        h(i, i) = 1;
        h(i + 1, i + 1) = -1;
        basis.push_back(h);
        labels.push_back("H" + std::to_string(i + 1));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis.push_back(detail::unit_matrix(N, j, i));
          labels.push_back("E" + idx(j, i));
        }
      break;
    }
    case ClassicalFamily::so: {
      // bilinear form with 1's on the antidiagonal: X^T S + S X = 0
      if (n < 3) throw UnsupportedParameter("so requires n >= 3");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i + j + 2 >= n + 1) continue;  // i + j < n - 1 (0-based)
          QMat m = detail::unit_matrix(N, i, j);
          m(n - 1 - j, n - 1 - i) -= 1;
          basis.push_back(m);
          labels.push_back("G" + idx(i, j));
        }
      break;
    }
    case ClassicalFamily::sp: {
      if (n < 2 || n % 2 != 0)
        throw UnsupportedParameter("sp requires even n >= 2");
      int m = n / 2;
      // J = [[0, I], [-I, 0]]; X = [[A, B], [C, -A^T]], B and C symmetric
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          QMat x = detail::unit_matrix(N, i, j);
          x(m + j, m + i) -= 1;
          basis.push_back(x);
          labels.push_back("A" + idx(i, j));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          QMat x = detail::unit_matrix(N, i, m + j);
          x(j, m + i) += 1;
          basis.push_back(x);
          labels.push_back("B" + idx(i, j));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          QMat x = detail::unit_matrix(N, m + i, j);
          x(m + j, i) += 1;
          basis.push_back(x);
          labels.push_back("C" + idx(i, j));
        }
      break;
    }
  }
  LieAlgebra g =
      make_lie_algebra(detail::structure_from_matrices(basis), labels);
  g.classical_ = ClassicalId{family, n};
  g.defining_ = basis;
  return g;
}

/// Coordinates of a defining-representation matrix in the basis of a
/// classical algebra, if it lies in the span.
inline std::optional<Element> element_from_matrix(const LieAlgebra& g,
                                                  const QMat& m) {
  std::vector<QVec> flat;
  for (const auto& b : g.defining_matrices()) flat.push_back(b.flatten());
  QMat sys = QMat::from_columns(flat);
  auto coeff = solve(sys, m.flatten());
  if (!coeff) return std::nullopt;
  return Element(*coeff);
}

}  // namespace orbitcert

#endif
