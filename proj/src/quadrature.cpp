#include "gsf/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gsf {

namespace {

JacobiRule golub_welsch(double alpha, double beta, int count) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("non-integrable exponent");
  if (count < 1) throw std::invalid_argument("jacobi_rule: count must be positive");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(count), sub(std::max(count - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < count; ++k) {
    const double s = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      // (k + ab) / (2k + ab - 1) = 1 at k = 1; written out so ab = -1 is harmless
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / (s * s * (s + 1.0));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  JacobiRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  if (count == 1) {
    rule.nodes = diag;
    rule.weights = Eigen::VectorXd::Constant(1, std::exp(log_mu0));
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("jacobi_rule: eigensolver failed");
  rule.nodes = es.eigenvalues();
  rule.weights = std::exp(log_mu0) * es.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace

const JacobiRule& standard_jacobi_rule(double alpha, double beta, int count) {
  static std::mutex mutex;
  static std::map<std::tuple<double, double, int>, JacobiRule> cache;
  const auto key = std::make_tuple(alpha, beta, count);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, golub_welsch(alpha, beta, count)).first;
  return it->second;
}

JacobiRule jacobi_rule(double lower, double upper, double alpha, double beta, int count) {
  if (!(upper > lower)) throw std::invalid_argument("jacobi_rule: empty interval");
  const JacobiRule& std_rule = standard_jacobi_rule(alpha, beta, count);
  const double half = 0.5 * (upper - lower);
  JacobiRule rule;
  rule.lower = lower;
  rule.upper = upper;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes = lower + half * (1.0 + std_rule.nodes.array());
  rule.weights = std::pow(half, alpha + beta + 1.0) * std_rule.weights;
  return rule;
}

JacobiRule graded_jacobi_rule(double lower, double upper, double alpha, double beta, double gap_hi,
                              double gap_lo, int count) {
  const double W = upper - lower;
  if (!(gap_hi < 0.5 * W) && !(gap_lo < 0.5 * W)) return jacobi_rule(lower, upper, alpha, beta, count);
  // v = log((g_lo + s) / (g_hi + W - s)), s = t - lower; g_lo + s = T sigma(v).
  const double gl = std::min(gap_lo, W), gh = std::min(gap_hi, W);
  const double T = gl + gh + W;
  const double v0 = std::log(gl / (gh + W)), v1 = std::log((gl + W) / gh);
  // the v-interval lengthens like log(W / g); scale the count with it
  const double g = std::min(gl, gh);
  count = static_cast<int>(std::ceil(count * (1.0 + 0.15 * std::log(0.5 * W / g))));
  const JacobiRule base = jacobi_rule(v0, v1, alpha, beta, count);
  JacobiRule rule = base;
  rule.lower = lower;
  rule.upper = upper;
  for (int i = 0; i < count; ++i) {
    const double v = base.nodes(i);
    // s and W - s without cancellation
    const double s = T * std::exp(v0) * std::expm1(v - v0) / ((1.0 + std::exp(v)) * (1.0 + std::exp(v0)));
    const double r = T * std::exp(-v1) * std::expm1(v1 - v) / ((1.0 + std::exp(-v)) * (1.0 + std::exp(-v1)));
    const double dsdv = (gl + s) * (gh + r) / T;
    rule.nodes(i) = s < r ? lower + s : upper - r;
    rule.weights(i) = base.weights(i) * dsdv * std::pow(s / (v - v0), beta) * std::pow(r / (v1 - v), alpha);
  }
  return rule;
}

JacobiRule beta_rule(double p, double q, int count) {
  JacobiRule rule = jacobi_rule(0.0, 1.0, q - 1.0, p - 1.0, count);
  rule.weights /= rule.weights.sum();
  return rule;
}

std::vector<JacobiRule> stick_breaking_rules(const Eigen::VectorXd& concentration, int count) {
  const Eigen::Index r = concentration.size();
  std::vector<JacobiRule> rules;
  for (Eigen::Index k = 0; k + 1 < r; ++k)
    rules.push_back(beta_rule(concentration(k), concentration.tail(r - k - 1).sum(), count));
  return rules;
}

DirichletSampler::DirichletSampler(Eigen::VectorXd concentration, std::uint64_t seed)
    : c_(std::move(concentration)), seed_(seed) {
  if (c_.size() < 1 || !(c_.array() > 0.0).all())
    throw std::invalid_argument("Dirichlet concentrations must be positive");
}

SimplexWeight DirichletSampler::draw(std::uint64_t index) const {
  CounterRng rng(seed_, index);
  return draw(rng);
}

SimplexWeight DirichletSampler::draw(CounterRng& rng) const {
  Eigen::VectorXd g(c_.size());
  for (;;) {
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
      std::gamma_distribution<double> gamma(c_(i), 1.0);
      g(i) = gamma(rng);
    }
    const double s = g.sum();
    // all-zero underflow needs every shape tiny; redraw from the same stream
    if (s > 0.0) return SimplexWeight(g / s);
  }
}

std::vector<SimplexWeight> dirichlet_sample(const DirichletSampler& sampler, std::size_t count,
                                            std::uint64_t first) {
  std::vector<SimplexWeight> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.draw(first + i));
  return out;
}

namespace {

constexpr double kTanhSinhStep = 0.5;
constexpr double kTanhSinhRange = 4.0;
constexpr int kTanhSinhLevels = 12;

std::vector<TanhSinhRule> build_tanh_sinh() {
  std::vector<TanhSinhRule> rules(kTanhSinhLevels);
  for (int level = 0; level < kTanhSinhLevels; ++level) {
    TanhSinhRule& rule = rules[level];
    rule.step = kTanhSinhStep / static_cast<double>(1 << level);
    const int stride = level == 0 ? 1 : 2;
    for (int j = 1;; j += stride) {
      const double t = j * rule.step;
      if (t > kTanhSinhRange) break;
      const double u = 0.5 * std::numbers::pi * std::sinh(t);
      const double ch = std::cosh(u);
      rule.offset.push_back(1.0 / (std::exp(u) * ch));
      rule.weight.push_back(0.5 * std::numbers::pi * std::cosh(t) / (ch * ch));
    }
  }
  return rules;
}

}  // namespace

const TanhSinhRule& tanh_sinh_rule(int level) {
  static const std::vector<TanhSinhRule> rules = build_tanh_sinh();
  if (level < 0 || level >= kTanhSinhLevels) throw std::out_of_range("tanh_sinh_rule: level");
  return rules[level];
}

}  // namespace gsf
