#ifndef ORBITCERT_QMATRIX_HPP
#define ORBITCERT_QMATRIX_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "orbitcert/rational.hpp"

namespace orbitcert {

/// Dense matrix of exact rationals. Row-major.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMat from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMat(0, 0);
    QMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static QMat from_columns(const std::vector<QVec>& cols) {
    if (cols.empty()) return QMat(0, 0);
    QMat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVec row(std::size_t i) const {
    QVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  QVec column(std::size_t j) const {
    QVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  QMat operator*(const QMat& other) const {
    assert(cols_ == other.rows_);
    QMat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          const Rat& b = other(k, j);
          if (sgn(b) != 0) out(i, j) += a * b;
        }
      }
    return out;
  }

  QVec operator*(const QVec& v) const {
    assert(cols_ == v.size());
    QVec out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0)
          out[i] += (*this)(i, j) * v[j];
    return out;
  }

  QMat operator+(const QMat& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    QMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
  }

  QMat operator-(const QMat& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    QMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
  }

  QMat scaled(const Rat& c) const {
    QMat out = *this;
    for (auto& x : out.data_) x *= c;
    return out;
  }

  Rat trace() const {
    assert(rows_ == cols_);
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  QVec flatten() const { return data_; }

  bool operator==(const QMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  QVec data_;
};

/// tr(A*B) without forming the product.
inline Rat trace_product(const QMat& a, const QMat& b) {
  assert(a.cols() == b.rows() && a.rows() == b.cols());
  Rat t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0) t += a(i, j) * b(j, i);
  return t;
}

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row in order.
inline std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && sgn(m(sel, c)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

/// Basis of the right kernel {x : m x = 0}. Canonical: one vector per free
/// column, with unit in the free position.
inline std::vector<QVec> kernel(QMat m) {
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -m(pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if any.
inline std::optional<QVec> solve(const QMat& m, const QVec& b) {
  assert(m.rows() == b.size());
  QMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVec x(m.cols(), Rat(0));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    x[pivots[pr]] = aug(pr, m.cols());
  return x;
}

/// Incrementally maintained row space with exact membership tests. Rows are
/// kept in reduced echelon form.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient_dim) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Reduces v against the current span; returns the residual.
  QVec reduce(QVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& c = v[pivots_[r]];
      if (sgn(c) != 0) {
        Rat f = c;
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
      }
    }
    return v;
  }

  bool contains(const QVec& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span if independent. Returns true when the span grew.
  bool add(const QVec& v) {
    QVec res = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(res[p]) == 0) ++p;
    if (p == dim_) return false;
    Rat inv = 1 / res[p];
    for (auto& x : res) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = rows_[r][p];
      if (sgn(f) != 0)
        for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * res[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(res));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  const std::vector<QVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in terms of basis() rows, if v lies in the span.
  std::optional<QVec> coordinates(const QVec& v) const {
    QVec coeff(rows_.size(), Rat(0));
    QVec res = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat c = res[pivots_[r]];
      if (sgn(c) != 0) {
        coeff[r] = c;
        for (std::size_t j = 0; j < dim_; ++j) res[j] -= c * rows_[r][j];
      }
    }
    if (!is_zero(res)) return std::nullopt;
    return coeff;
  }

 private:
  std::size_t dim_;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
/// recursion. Returned coefficients are c[0] + c[1] t + ... + c[n] t^n with
/// c[n] = 1.
inline QVec char_poly(const QMat& a) {
  assert(a.rows() == a.cols());
  std::size_t n = a.rows();
  QVec c(n + 1, Rat(0));
  c[n] = 1;
  QMat m = QMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rat ck = -m.trace() / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

/// Minimal polynomial via the first linear dependence among I, A, A^2, ...
/// Monic coefficient vector, lowest degree first.
inline QVec minimal_poly(const QMat& a) {
  assert(a.rows() == a.cols());
  std::size_t n = a.rows();
  SpanBuilder span(n * n);
  std::vector<QMat> powers;
  QMat p = QMat::identity(n);
  while (true) {
    QVec flat = p.flatten();
    if (!span.contains(flat)) {
      span.add(flat);
      powers.push_back(p);
      p = p * a;
      continue;
    }
    // p = A^k depends on lower powers: solve for coefficients.
    QMat sys = QMat::from_columns([&] {
      std::vector<QVec> cols;
      for (const auto& q : powers) cols.push_back(q.flatten());
      return cols;
    }());
    auto coeff = solve(sys, flat);
    assert(coeff.has_value());
    QVec out(powers.size() + 1, Rat(0));
    for (std::size_t i = 0; i < powers.size(); ++i) out[i] = -(*coeff)[i];
    out[powers.size()] = 1;
    return out;
  }
}

inline bool is_nilpotent_matrix(const QMat& a) {
  assert(a.rows() == a.cols());
  if (a.rows() == 0) return true;
  QMat p = a;
  std::size_t k = 1;
  while (k < a.rows() && !p.is_zero()) {
    p = p * p;  // squaring reaches exponent >= n quickly
    k *= 2;
  }
  return p.is_zero();
}

}  // namespace orbitcert

#endif
