#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "gsf/cartan.hpp"
#include "gsf/special.hpp"

namespace gsf {

/// Spectral parameter lambda = (lambda_1..lambda_n), complex.
class SpectralParam {
 public:
  SpectralParam() = default;
  explicit SpectralParam(Eigen::VectorXcd lambda);
  SpectralParam(std::initializer_list<Complex> lambda);

  int size() const { return static_cast<int>(l_.size()); }
  Complex operator[](int k) const { return l_(k); }
  const Eigen::VectorXcd& values() const { return l_; }

  /// lambda(X) = sum_j lambda_j x_j.
  Complex pairing(const Eigen::VectorXd& x) const;
  /// lambda_0 = (lambda_i - lambda_n)_{i<n}.
  SpectralParam reduced() const;
  /// lambda + c * rho^(m).
  SpectralParam shifted(Complex c, double m) const;

 private:
  Eigen::VectorXcd l_;
};

/// rho^(m)_k = (m/2)(n + 1 - 2k), k = 1..n.
Eigen::VectorXd rho_vector(int n, double m);

enum class Method { quad, mc };
/// Integration variables of the recursion: the interlacing box (eta) or the
/// simplex (gamma). `automatic` is the box, which stays accurate near walls.
enum class Route { automatic, box, simplex };

const char* to_string(Method m);

struct EvalOptions {
  Method method = Method::quad;
  Route route = Route::automatic;
  /// Nodes per dimension. 0 starts the adaptive sequence 8, 10, 12, 15, ... .
  int nodes = 0;
  /// When false the rule with `nodes` points is used as is (smooth in X, as
  /// finite-difference stencils need); the error estimate then compares it
  /// with the next smaller rule of the adaptive sequence.
  bool adaptive = true;
  /// Fixed rules only: skip the comparison rule and report a zero error estimate.
  bool skip_error_estimate = false;
  int max_nodes = 512;
  double tol = 1e-10;
  /// Stop growing the rule once the nested leaf count would pass this.
  double max_evaluations = 4e8;
  std::size_t samples = 100000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct EvalResult {
  Complex value{};
  double error_estimate = 0.0;
  Method method = Method::quad;
  long long samples_or_nodes = 0;
  bool converged = true;
};

/// chi_lambda(e^X) = phi_{lambda - i rho}(e^X); chi_0 = 1.
EvalResult eval_chi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts = {});
/// Heckman-Opdam spherical function phi_lambda(e^X); phi_lambda(e^0) = 1, phi_{-i rho} = 1.
EvalResult eval_phi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts = {});
/// Rational (Dunkl) spherical function psi_lambda(X); psi_0 = 1.
EvalResult eval_psi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts = {});

struct LimitProbe {
  double epsilon = 0.0;
  double deviation = 0.0;  // |psi_lambda(X) - phi_{lambda/eps}(e^{eps X})|
  double error_estimate = 0.0;
};

std::vector<LimitProbe> rational_limit_probe(const SpectralParam& lambda, const CartanPoint& X,
                                             double m, const std::vector<double>& epsilons,
                                             const EvalOptions& opts = {});

}  // namespace gsf
