#include "gsf/diffcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace gsf {

Complex apply_radial(const RadialOperator& op, const CartanFunction& f, const Eigen::VectorXd& X) {
  const int n = static_cast<int>(X.size());
  if (n != op.n) throw std::invalid_argument("apply_radial: rank mismatch");
  if (!(op.h > 0.0)) throw std::invalid_argument("apply_radial: step must be positive");
  const double h = op.h;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(X(i) - X(j)) < 10.0 * h) throw std::domain_error("stencil crosses wall");

  const Complex f0 = f(X);
  Eigen::VectorXcd d1(n), d2(n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd xp = X, xm = X;
    xp(k) += h;
    xm(k) -= h;
    const Complex fp = f(xp), fm = f(xm);
    d1(k) = (fp - fm) / (2.0 * h);
    d2(k) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  if (op.op == RadialTag::L1) return d1.sum();
  Complex out = d2.sum();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = X(i) - X(j);
      const double c = op.setting == Setting::trigonometric ? 1.0 / std::tanh(d) : 1.0 / d;
      out += op.m * c * (d1(i) - d1(j));
    }
  return out;
}

Complex eigenvalue_L1(const SpectralParam& lambda) { return Complex(0.0, 1.0) * lambda.values().sum(); }

Complex eigenvalue_L2(const SpectralParam& lambda, double m, int n, Setting setting) {
  if (lambda.size() != n) throw std::invalid_argument("eigenvalue_L2: rank mismatch");
  const Eigen::VectorXcd& l = lambda.values();
  if (setting == Setting::rational) return -(l.array() * l.array()).sum();
  require_positive_multiplicity(m);
  const Complex L1 = eigenvalue_L1(lambda);
  const Eigen::VectorXcd c = (0.5 * (n - 1)) + (Complex(0.0, 1.0) / m) * l.array();
  // e_2(c) = ((sum c)^2 - sum c^2) / 2
  const Complex e2 = 0.5 * (c.sum() * c.sum() - (c.array() * c.array()).sum());
  const double C = n * (n - 1.0) * (n - 2.0) * (3.0 * n - 1.0) / 24.0;
  return L1 * L1 + m * (n - 1.0) * (n - 1.0) * L1 + 2.0 * m * m * C - 2.0 * m * m * e2;
}

double eigen_residual(const SpectralParam& lambda, const Eigen::VectorXd& X, double m,
                      Setting setting, double h, const EvalOptions& quad) {
  const int n = static_cast<int>(X.size());
  EvalOptions fixed = quad;
  fixed.method = Method::quad;
  auto evaluate = [&](const Eigen::VectorXd& x, const EvalOptions& o) {
    const CartanPoint p(x);
    return setting == Setting::trigonometric ? eval_phi(lambda, p, m, o) : eval_psi(lambda, p, m, o);
  };
  if (fixed.nodes <= 0 || fixed.adaptive) {
    EvalOptions probe = quad;
    probe.method = Method::quad;
    probe.adaptive = true;
    fixed.nodes = static_cast<int>(evaluate(X, probe).samples_or_nodes);
  }
  fixed.adaptive = false;
  fixed.skip_error_estimate = true;
  const CartanFunction f = [&](const Eigen::VectorXd& x) { return evaluate(x, fixed).value; };
  const RadialOperator op{n, m, RadialTag::L2, h, setting};
  const Complex fx = f(X);
  const Complex lhs = apply_radial(op, f, X);
  return std::abs(lhs - eigenvalue_L2(lambda, m, n, setting) * fx) / (1.0 + std::abs(fx));
}

}  // namespace gsf
