#pragma once

#include <Eigen/Dense>

#include "gsf/cartan.hpp"
#include "gsf/special.hpp"

namespace gsf {

/// A point of the probability simplex sigma_r: gamma_i >= 0, sum gamma_i = 1.
class SimplexWeight {
 public:
  SimplexWeight() = default;
  explicit SimplexWeight(Eigen::VectorXd gamma);

  int size() const { return static_cast<int>(g_.size()); }
  double operator[](int i) const { return g_(i); }
  const Eigen::VectorXd& values() const { return g_; }

  static SimplexWeight vertex(int r, int i);

 private:
  Eigen::VectorXd g_;
};

/// Precomputed data for the change of variables between simplex weights and
/// the free interlacing coordinates eta of a block structure.
///
/// In the trigonometric setting the node variable is y = e^{2(t - a_1)} - 1,
/// so that the levels map to u_1 = 0 > u_2 > ... > u_r > -1 without
/// overflow and with full relative precision for close levels. In the
/// rational setting u_j = a_j - a_1.
class NodeTransform {
 public:
  NodeTransform(const BlockStructure& blocks, Setting setting);

  Setting setting() const { return setting_; }
  int r() const { return static_cast<int>(u_.size()); }
  const Eigen::VectorXd& shifted_levels() const { return u_; }
  const BlockStructure& blocks() const { return blocks_; }

  double to_node(double t) const;
  double from_node(double y) const;

  /// gamma_p = prod_j (y_j - u_p) / prod_{j != p} (u_j - u_p).
  Eigen::VectorXd weights(const Eigen::VectorXd& eta) const;
  /// Roots of q_1(y) = sum_i gamma_i prod_{j != i} (y - u_j), mapped back to eta.
  Eigen::VectorXd roots(const Eigen::VectorXd& gamma) const;

 private:
  BlockStructure blocks_;
  Setting setting_;
  double origin_;
  Eigen::VectorXd u_;
  Eigen::VectorXd denom_;  // prod_{j != p} (u_j - u_p)
};

/// The r-1 roots of q_1 for the given weights, sorted decreasing; each
/// eta_k lies in [a_{k+1}, a_k]. Levels with zero weight are returned as exact
/// boundary roots.
Eigen::VectorXd roots_from_weights(const SimplexWeight& gamma, const BlockStructure& blocks,
                                   Setting setting);

/// Inverse map. Throws std::domain_error("not interlaced") when eta leaves the box.
SimplexWeight weights_from_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                 Setting setting);

/// |d(gamma_1..gamma_{r-1}) / d(eta_1..eta_{r-1})| in closed (Cauchy determinant) form.
double jacobian_weights_to_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                 Setting setting);

/// Log of the Jacobian; -inf on the corners where it vanishes.
double log_jacobian_weights_to_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                     Setting setting);

}  // namespace gsf
