#ifndef ORBITCERT_KEMPF_NESS_HPP
#define ORBITCERT_KEMPF_NESS_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <string>
#include <vector>

#include "orbitcert/homvector.hpp"
#include "orbitcert/subalgebra.hpp"

namespace orbitcert {

enum class DescentStatus { ConvergedToZero, ConvergedToPositiveMin, IterationLimit };

inline std::string to_string(DescentStatus s) {
  switch (s) {
    case DescentStatus::ConvergedToZero: return "ConvergedToZero";
    case DescentStatus::ConvergedToPositiveMin: return "ConvergedToPositiveMin";
    default: return "IterationLimit";
  }
}

struct DescentResult {
  DescentStatus status = DescentStatus::IterationLimit;
  double norm_infimum_estimate = 0.0;  // squared-norm value at the last point
  double grad_norm = 0.0;
  int iterations = 0;
};

/// Floating-point gradient descent on the orbit of v: minimizes the squared
/// Euclidean norm of exp(ad X) v over X in the acting subalgebra. The action
/// moves the target factor only. This is the only floating-point routine in
/// the library; exact verdicts never depend on it without re-verification.
inline DescentResult kempf_ness_descent(const HomVector& v,
                                        const Subalgebra& acting,
                                        double tol = 1e-8,
                                        int max_iter = 10000) {
  const LieAlgebra& g = *v.ambient;
  if (tol <= 0) throw UnsupportedParameter("kempf_ness_descent needs tol > 0");
  if (!is_reductive(g, acting)) throw NonReductiveActingAlgebra();

  const std::size_t n = g.dim(), m = v.columns(), p = acting.dim();
  DescentResult out;
  if (m == 0 || v.is_zero()) {
    out.status = DescentStatus::ConvergedToZero;
    return out;
  }

  std::vector<Eigen::MatrixXd> ad(p);
  for (std::size_t b = 0; b < p; ++b) {
    QMat q = g.ad(acting.basis[b]);
    ad[b] = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ad[b](i, j) = q(i, j).get_d();
  }
  Eigen::MatrixXd w(n, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) w(i, k) = v.images[k].coords[i].get_d();

  constexpr double armijo = 1e-4;
  for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
    double f = w.squaredNorm();
    out.norm_infimum_estimate = f;
    if (f < tol) {
      out.status = DescentStatus::ConvergedToZero;
      out.grad_norm = 0.0;
      return out;
    }
    Eigen::VectorXd grad(p);
    for (std::size_t b = 0; b < p; ++b)
      grad(b) = 2.0 * (ad[b] * w).cwiseProduct(w).sum();
    double gn2 = grad.squaredNorm();
    out.grad_norm = std::sqrt(gn2);
    if (out.grad_norm < tol) {
      out.status = DescentStatus::ConvergedToPositiveMin;
      return out;
    }
    Eigen::MatrixXd dir = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t b = 0; b < p; ++b) dir -= grad(b) * ad[b];
    double step = 1.0;
    bool moved = false;
    while (step > 1e-18) {
      Eigen::MatrixXd cand = (step * dir).exp() * w;
      if (cand.squaredNorm() <= f - armijo * step * gn2) {
        w = cand;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      // line search stalled; the value is the best estimate we have
      out.status = DescentStatus::IterationLimit;
      return out;
    }
  }
  out.norm_infimum_estimate = w.squaredNorm();
  if (out.norm_infimum_estimate < tol)
    out.status = DescentStatus::ConvergedToZero;
  else
    out.status = DescentStatus::IterationLimit;
  return out;
}

}  // namespace orbitcert

#endif
