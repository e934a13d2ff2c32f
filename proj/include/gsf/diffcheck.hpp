#pragma once

#include <Eigen/Dense>
#include <functional>

#include "gsf/eval.hpp"
#include "gsf/special.hpp"

namespace gsf {

enum class RadialTag { L1, L2 };

/// L1 = sum_k d/dx_k;
/// L2 = sum_k d^2/dx_k^2 + m sum_{i<j} c(x_i - x_j)(d_i - d_j),
/// with c = coth (trigonometric) or c(d) = 1/d (rational).
struct RadialOperator {
  int n = 1;
  double m = 1.0;
  RadialTag op = RadialTag::L2;
  double h = 1e-3;
  Setting setting = Setting::trigonometric;
};

using CartanFunction = std::function<Complex(const Eigen::VectorXd&)>;

/// Central differences, O(h^2). Throws std::domain_error("stencil crosses wall")
/// when two coordinates of X are closer than 10h.
Complex apply_radial(const RadialOperator& op, const CartanFunction& f, const Eigen::VectorXd& X);

/// i * sum_k lambda_k.
Complex eigenvalue_L1(const SpectralParam& lambda);

/// Trigonometric: with L1 = i sum lambda_k, c_k = (n-1)/2 + i lambda_k/m and
/// C = n(n-1)(n-2)(3n-1)/24,
///   L2 = L1^2 + m (n-1)^2 L1 + 2 m^2 C - 2 m^2 e_2(c).
/// Rational: -sum lambda_k^2.
Complex eigenvalue_L2(const SpectralParam& lambda, double m, int n,
                      Setting setting = Setting::trigonometric);

/// |L2 f(X) - eigenvalue f(X)| / (1 + |f(X)|) for f = phi_lambda (trigonometric) or
/// psi_lambda (rational). The quadrature rule is fixed across the stencil: when
/// quad.nodes is 0 it is chosen adaptively at X first.
double eigen_residual(const SpectralParam& lambda, const Eigen::VectorXd& X, double m,
                      Setting setting, double h, const EvalOptions& quad = {});

}  // namespace gsf
