#pragma once

// Independent reference computations used by the checks and the unit tests.
// Nothing here calls into the recursion code.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace gsf::oracle {

using Complex = std::complex<double>;

/// All n! permutations of x.
inline std::vector<Eigen::VectorXd> orbit(const Eigen::VectorXd& x) {
  std::vector<int> p(x.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Eigen::VectorXd> out;
  do {
    Eigen::VectorXd v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) v(i) = x(p[i]);
    out.push_back(v);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Phase-one simplex (Bland's rule) for: exists w >= 0, sum w = 1,
/// sum_s w_s v_s = h, with v_s the orbit of x. Returns the minimal total
/// infeasibility; H lies in the hull iff it is (numerically) zero.
inline double hull_infeasibility(const Eigen::VectorXd& h, const Eigen::VectorXd& x) {
  const auto verts = orbit(x);
  const int n = static_cast<int>(h.size());
  const int k = static_cast<int>(verts.size());
  const int rows = n + 1;
  // columns: k weights, rows artificials, rhs
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(rows + 1, k + rows + 1);
  for (int i = 0; i < rows; ++i) {
    double rhs = i < n ? h(i) : 1.0;
    const double sign = rhs < 0.0 ? -1.0 : 1.0;
    for (int s = 0; s < k; ++s) t(i, s) = sign * (i < n ? verts[s](i) : 1.0);
    t(i, k + i) = 1.0;
    t(i, k + rows) = sign * rhs;
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = k + i;
  // objective row: minimize sum of artificials, written as reduced costs
  for (int i = 0; i < rows; ++i) t.row(rows) -= t.row(i);
  for (int i = 0; i < rows; ++i) t(rows, k + i) = 0.0;
  const double eps = 1e-12;
  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int c = 0; c < k + rows; ++c)
      if (t(rows, c) < -eps) {
        enter = c;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (t(i, enter) <= eps) continue;
      const double ratio = t(i, k + rows) / t(i, enter);
      if (leave < 0 || ratio < best - eps || (std::abs(ratio - best) <= eps && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase one
    t.row(leave) /= t(leave, enter);
    for (int i = 0; i <= rows; ++i)
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    basis[leave] = enter;
  }
  return -t(rows, k + rows);
}

inline bool in_hull(const Eigen::VectorXd& h, const Eigen::VectorXd& x, double tol = 1e-9) {
  return hull_infeasibility(h, x) <= tol * (1.0 + x.cwiseAbs().maxCoeff());
}

/// prod_{j<k} (a_j - a_k).
inline Complex vandermonde(const Eigen::VectorXcd& a) {
  Complex p = 1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j)
    for (Eigen::Index k = j + 1; k < a.size(); ++k) p *= a(j) - a(k);
  return p;
}

/// Trigonometric m = 2: pi(rho)/pi(i lambda) det[e^{i lambda_j x_k}] / det[e^{rho_j x_k}],
/// rho_j = n + 1 - 2j.
inline Complex phi_m2(const Eigen::VectorXcd& lam, const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXcd num(n, n);
  Eigen::MatrixXd den(n, n);
  Eigen::VectorXcd rho(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    rho(j) = static_cast<double>(n - 1 - 2 * j);
    for (Eigen::Index k = 0; k < n; ++k) {
      num(j, k) = std::exp(Complex(0.0, 1.0) * lam(j) * x(k));
      den(j, k) = std::exp(rho(j).real() * x(k));
    }
  }
  return vandermonde(rho) / vandermonde(Complex(0.0, 1.0) * lam) * num.determinant() / den.determinant();
}

/// Rational m = 2 (Harish-Chandra-Itzykson-Zuber):
/// prod_{p<n} p! det[e^{i lambda_j x_k}] / (pi(i lambda) pi(x)).
inline Complex psi_m2(const Eigen::VectorXcd& lam, const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXcd num(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) num(j, k) = std::exp(Complex(0.0, 1.0) * lam(j) * x(k));
  double c = 1.0;
  for (Eigen::Index p = 1; p < n; ++p) c *= std::tgamma(static_cast<double>(p + 1));
  return c * num.determinant() / (vandermonde(Complex(0.0, 1.0) * lam) * vandermonde(x.cast<Complex>()));
}

/// Haar-distributed orthogonal (m = 1) or unitary (m = 2) matrix from the QR
/// factorization of a Gaussian matrix, with the phases of R's diagonal removed.
template <class Rng>
Eigen::MatrixXcd haar_matrix(int n, int m, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = m == 1 ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// diag(U X U*) for a Haar U: a draw from the rational kernel at m = 1, 2.
template <class Rng>
Eigen::VectorXd haar_diagonal(const Eigen::VectorXd& x, int m, Rng& rng) {
  const Eigen::MatrixXcd u = haar_matrix(static_cast<int>(x.size()), m, rng);
  return (u * x.cast<Complex>().asDiagonal() * u.adjoint()).diagonal().real();
}

/// Iwasawa projection H(g) of g = e^X k, k Haar: writing g = k' e^H n with n upper
/// unipotent, g* g = n* e^{2H} n, so e^{2H} is the squared diagonal of the
/// Cholesky factor of g* g. For m = 1, 2,
///   phi_lambda(e^X) = E_k exp((i lambda - rho)(H(e^X k))),  rho_k = (m/2)(n + 1 - 2k).
template <class Rng>
Eigen::VectorXd iwasawa_sample(const Eigen::VectorXd& x, int m, Rng& rng) {
  const int n = static_cast<int>(x.size());
  const Eigen::MatrixXcd k = haar_matrix(n, m, rng);
  const Eigen::MatrixXcd g = x.array().exp().matrix().cast<Complex>().asDiagonal() * k;
  const Eigen::LLT<Eigen::MatrixXcd> llt(g.adjoint() * g);
  const Eigen::MatrixXcd l = llt.matrixL();
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) h(i) = std::log(std::abs(l(i, i)));
  return h;
}

}  // namespace gsf::oracle
