#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "gsf/cartan.hpp"
#include "gsf/kernels.hpp"
#include "gsf/quadrature.hpp"
#include "gsf/special.hpp"

namespace gsf {

/// D_H(X) = {xi in E(X) : H' in C(xi)} in the free coordinates
/// eta_1..eta_{r-2}; eta_{r-1} follows from tr xi = tr H'. Stored as the
/// half-planes A eta <= b, with a vertex list for the 1- and 2-dimensional cases.
struct FiberDomain {
  BlockStructure blocks;
  Eigen::VectorXd head;         // H' = (h_1..h_{n-1})
  Eigen::MatrixXd A;            // rows: constraints on (eta_1..eta_{r-2})
  Eigen::VectorXd b;
  std::vector<Eigen::VectorXd> vertices;  // r = 2: the point; r = 3: interval ends; r = 4: polygon

  int dimension() const { return blocks.r() - 2; }
  bool empty() const { return vertices.empty(); }
  /// Completes eta_1..eta_{r-2} with eta_{r-1}.
  Eigen::VectorXd full_eta(const Eigen::VectorXd& free) const;
  /// xi assembled from the free coordinates.
  Eigen::VectorXd xi(const Eigen::VectorXd& free) const;
};

/// Throws std::domain_error("not in hull") for H outside C(X),
/// std::invalid_argument for X = cI, and std::domain_error("unsupported rank")
/// for more than four blocks.
FiberDomain fiber_domain(const CartanPoint& H, const CartanPoint& X);

struct KernelOptions {
  double tol = 1e-10;
  int max_level = 8;
};

/// Laplace kernel K_n(H, X) (trigonometric) or its rational analogue, n <= 4,
/// as a density in (h_1..h_{n-1}). The boundary policy is that of kernel_K2,
/// applied when rado_slack(H, X) <= 0; band points with positive slack are evaluated.
KernelValue<double> kernel_K(const CartanPoint& H, const CartanPoint& X, double m, Setting setting,
                             const KernelOptions& opts = {});

/// One draw H from the recursive measure of a chamber-ordered x: gamma ~ Dirichlet(m n_i/2),
/// xi from the roots, H' drawn recursively from xi, h_n = tr x - tr H'.
/// E e^{i lambda(H)} equals psi_lambda (rational) or chi_lambda (trigonometric).
Eigen::VectorXd sample_point(const Eigen::VectorXd& x_sorted, double m, Setting setting,
                             CounterRng& rng);

/// Draws count points for X (sorted internally). Row i depends only on (seed, i).
Eigen::MatrixXd sample_measure(const CartanPoint& X, double m, Setting setting, std::size_t count,
                               std::uint64_t seed);

struct MonteCarloValue {
  Complex value{};
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Integral of the symmetrization of f against the representing kernel of X:
/// the rational measure directly, or the trigonometric sampler weighted by e^{-rho(H)}.
MonteCarloValue dual_abel(const std::function<Complex(const Eigen::VectorXd&)>& f,
                          const CartanPoint& X, double m, Setting setting, std::size_t samples,
                          std::uint64_t seed);

}  // namespace gsf
