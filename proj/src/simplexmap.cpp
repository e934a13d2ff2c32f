#include "gsf/simplexmap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gsf {

SimplexWeight::SimplexWeight(Eigen::VectorXd gamma) : g_(std::move(gamma)) {
  if (g_.size() < 1) throw std::invalid_argument("SimplexWeight needs at least one entry");
  const double slack = 1e-14 * static_cast<double>(std::max<Eigen::Index>(1, g_.size()));
  if ((g_.array() < -slack).any() || !g_.allFinite())
    throw std::invalid_argument("SimplexWeight entries must be nonnegative");
  if (std::abs(g_.sum() - 1.0) > slack)
    throw std::invalid_argument("SimplexWeight entries must sum to one");
  g_ = g_.cwiseMax(0.0);
}

SimplexWeight SimplexWeight::vertex(int r, int i) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(r);
  g(i) = 1.0;
  return SimplexWeight(std::move(g));
}

NodeTransform::NodeTransform(const BlockStructure& blocks, Setting setting)
    : blocks_(blocks), setting_(setting), origin_(blocks.levels(0)) {
  const int r = blocks.r();
  u_.resize(r);
  for (int j = 0; j < r; ++j) u_(j) = to_node(blocks.levels(j));
  u_(0) = 0.0;
  denom_.resize(r);
  for (int p = 0; p < r; ++p) {
    double d = 1.0;
    for (int j = 0; j < r; ++j)
      if (j != p) d *= u_(j) - u_(p);
    denom_(p) = d;
  }
}

double NodeTransform::to_node(double t) const {
  return setting_ == Setting::trigonometric ? std::expm1(2.0 * (t - origin_)) : t - origin_;
}

double NodeTransform::from_node(double y) const {
  return setting_ == Setting::trigonometric ? origin_ + 0.5 * std::log1p(y) : origin_ + y;
}

Eigen::VectorXd NodeTransform::weights(const Eigen::VectorXd& eta) const {
  const int r = this->r();
  Eigen::VectorXd y(eta.size());
  for (Eigen::Index k = 0; k < eta.size(); ++k) y(k) = to_node(eta(k));
  Eigen::VectorXd g(r);
  for (int p = 0; p < r; ++p) {
    double num = 1.0;
    for (int j = 0; j + 1 < r; ++j) num *= y(j) - u_(p);
    g(p) = num / denom_(p);
  }
  return g;
}

namespace {

// q_0(y) = sum_{s in S} gamma_s prod_{j in S, j != s} (y - u_j)
double eval_q(double y, const std::vector<double>& g, const std::vector<double>& u) {
  double q = 0.0;
  const std::size_t k = g.size();
  for (std::size_t s = 0; s < k; ++s) {
    double t = g[s];
    for (std::size_t j = 0; j < k; ++j)
      if (j != s) t *= y - u[j];
    q += t;
  }
  return q;
}

double eval_dq(double y, const std::vector<double>& g, const std::vector<double>& u) {
  const std::size_t k = g.size();
  double dq = 0.0;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t l = 0; l < k; ++l) {
      if (l == s) continue;
      double t = g[s];
      for (std::size_t j = 0; j < k; ++j)
        if (j != s && j != l) t *= y - u[j];
      dq += t;
    }
  }
  return dq;
}

// Root of q in [lo, hi], where q(lo) and q(hi) have opposite signs.
double bracketed_root(double lo, double hi, const std::vector<double>& g,
                      const std::vector<double>& u) {
  double flo = eval_q(lo, g, u);
  const double width = hi - lo;
  const double stop = 1e-14 * width;
  while (hi - lo > stop) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = eval_q(mid, g, u);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double y = 0.5 * (lo + hi);
  const double dq = eval_dq(y, g, u);
  if (dq != 0.0) {
    const double polished = y - eval_q(y, g, u) / dq;
    if (polished >= lo && polished <= hi) y = polished;
  }
  return y;
}

}  // namespace

Eigen::VectorXd NodeTransform::roots(const Eigen::VectorXd& gamma) const {
  const int r = this->r();
  if (gamma.size() != r) throw std::invalid_argument("roots: weight count must equal block count");
  if (r < 2) return Eigen::VectorXd(0);
  std::vector<double> g, u, result;
  for (int j = 0; j < r; ++j) {
    if (gamma(j) > 0.0) {
      g.push_back(gamma(j));
      u.push_back(u_(j));
    } else {
      // levels carrying no weight factor out of q_1 as exact roots
      result.push_back(u_(j));
    }
  }
  if (g.empty()) throw std::invalid_argument("roots: weights vanish identically");
  if (g.size() == 2) {
    result.push_back((g[0] * u[1] + g[1] * u[0]) / (g[0] + g[1]));
  } else {
    for (std::size_t t = 0; t + 1 < g.size(); ++t)
      result.push_back(bracketed_root(u[t + 1], u[t], g, u));
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  Eigen::VectorXd eta(r - 1);
  for (int k = 0; k + 1 < r; ++k) eta(k) = from_node(result[k]);
  return eta;
}

Eigen::VectorXd roots_from_weights(const SimplexWeight& gamma, const BlockStructure& blocks,
                                   Setting setting) {
  if (blocks.r() < 2) return Eigen::VectorXd(0);
  return NodeTransform(blocks, setting).roots(gamma.values());
}

SimplexWeight weights_from_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                 Setting setting) {
  const int r = blocks.r();
  if (eta.size() != r - 1) throw std::invalid_argument("weights_from_nodes: expected r-1 nodes");
  const auto& a = blocks.levels;
  const double tol = 1e-12 * std::max(1.0, a(0) - a(r - 1));
  for (int k = 0; k + 1 < r; ++k)
    if (eta(k) > a(k) + tol || eta(k) < a(k + 1) - tol) throw std::domain_error("not interlaced");
  if (r == 1) return SimplexWeight::vertex(1, 0);
  Eigen::VectorXd g = NodeTransform(blocks, setting).weights(eta).cwiseMax(0.0);
  g /= g.sum();
  return SimplexWeight(std::move(g));
}

double log_jacobian_weights_to_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                     Setting setting) {
  const int r = blocks.r();
  if (eta.size() != r - 1) throw std::invalid_argument("jacobian: expected r-1 nodes");
  const Eigen::VectorXd a = blocks.levels.array() - blocks.levels(0);
  const Eigen::VectorXd e = eta.array() - blocks.levels(0);
  double lj = 0.0;
  for (int i = 0; i + 1 < r; ++i)
    for (int j = i + 1; j + 1 < r; ++j) {
      const double d = e(i) - e(j);
      if (d <= 0.0) return -std::numeric_limits<double>::infinity();
      lj += log_root_factor(setting, d);
    }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) lj -= log_root_factor(setting, a(i) - a(j));
  if (setting == Setting::trigonometric) lj += r * e.sum() - (r - 1) * a.sum();
  return lj;
}

double jacobian_weights_to_nodes(const Eigen::VectorXd& eta, const BlockStructure& blocks,
                                 Setting setting) {
  return std::exp(log_jacobian_weights_to_nodes(eta, blocks, setting));
}

}  // namespace gsf
