#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "gsf/simplexmap.hpp"

namespace gsf {

/// Gauss rule for  int_a^b f(t) (b - t)^alpha (t - a)^beta dt ~ sum_i w_i f(t_i).
struct JacobiRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  double lower = -1.0, upper = 1.0;
  double alpha = 0.0, beta = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Golub-Welsch construction. Throws std::invalid_argument("non-integrable exponent")
/// when alpha or beta is <= -1.
JacobiRule jacobi_rule(double lower, double upper, double alpha, double beta, int count);

/// The rule on [-1, 1], memoized per (alpha, beta, count). Safe to call concurrently.
const JacobiRule& standard_jacobi_rule(double alpha, double beta, int count);

/// Rule for the same weighted integral when the integrand also carries a
/// singular factor just outside the interval, at distance gap_hi above `upper`
/// or gap_lo below `lower` (infinity when absent). If either gap is below half
/// the width, the rule is Gauss-Jacobi in v = log((g_lo + s) / (g_hi + W - s)),
/// s = t - lower, gaps capped at W; the integrand is then analytic in |Im v| < pi.
/// The graded rule has ceil(count (1 + 0.15 log(W / 2g))) nodes, g the smaller gap.
JacobiRule graded_jacobi_rule(double lower, double upper, double alpha, double beta, double gap_hi,
                              double gap_lo, int count);

/// Probability rule for Beta(p, q) on [0, 1]: weights sum to one.
JacobiRule beta_rule(double p, double q, int count);

/// Stick-breaking factorization of Dirichlet(c_1..c_r): with t_k ~ Beta(c_k, c_{k+1}+...+c_r)
/// independent, gamma_k = t_k prod_{j<k} (1 - t_j) and gamma_r = prod_{j<r} (1 - t_j).
/// Returns the r-1 one-dimensional probability rules for t_1..t_{r-1}.
std::vector<JacobiRule> stick_breaking_rules(const Eigen::VectorXd& concentration, int count);

/// SplitMix64 as a standard uniform random bit generator. Cheap to seed, so
/// a fresh engine per draw index costs nothing.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t state) : s_(state) {}
  CounterRng(std::uint64_t seed, std::uint64_t index) : s_(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(s_ += 0x9e3779b97f4a7c15ULL); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t s_;
};

/// Dirichlet(c_1..c_r) via normalized independent Gamma(c_i, 1) variates.
class DirichletSampler {
 public:
  DirichletSampler(Eigen::VectorXd concentration, std::uint64_t seed);

  const Eigen::VectorXd& concentration() const { return c_; }
  std::uint64_t seed() const { return seed_; }

  /// The draw determined by (seed, index).
  SimplexWeight draw(std::uint64_t index) const;
  /// A draw from an engine the caller owns.
  SimplexWeight draw(CounterRng& rng) const;

 private:
  Eigen::VectorXd c_;
  std::uint64_t seed_;
};

/// Draws with indices first, first+1, ..., first+count-1.
std::vector<SimplexWeight> dirichlet_sample(const DirichletSampler& sampler, std::size_t count,
                                            std::uint64_t first = 0);

/// Double-exponential (tanh-sinh) nodes on [-1, 1] with step h. The
/// complement 1 - |x| is kept separately so endpoint distances stay exact.
struct TanhSinhRule {
  double step = 0.0;
  std::vector<double> offset;  // 1 - |x_k| for the nodes new at this level, x = 0 excluded
  std::vector<double> weight;
};

const TanhSinhRule& tanh_sinh_rule(int level);

template <class T>
struct Integral {
  T value{};
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Integrates f over [a, b] with tanh-sinh rules, halving the step until two
/// successive levels agree to tol * max(1, |I|). Endpoint singularities of
/// algebraic or logarithmic type are tolerated. f receives the node; nodes
/// never coincide with a or b. Nodes near b are rounded to absolute precision
/// of b, so a strong singularity is best placed at a = 0.
template <class T, class F>
Integral<T> tanh_sinh_integrate(F&& f, double a, double b, double tol, int max_level = 7) {
  Integral<T> out;
  if (!(b > a)) return out;
  const double half = 0.5 * (b - a);
  auto level_sum = [&](int level) {
    const TanhSinhRule& rule = tanh_sinh_rule(level);
    T s{};
    if (level == 0) {
      s += (0.5 * std::numbers::pi) * f(a + half);
      ++out.evaluations;
    }
    for (std::size_t k = 0; k < rule.offset.size(); ++k) {
      const double c = rule.offset[k];
      const double w = rule.weight[k];
      const double lo = a + half * c, hi = b - half * c;
      if (lo > a) {
        s += w * f(lo);
        ++out.evaluations;
      }
      if (hi < b) {
        s += w * f(hi);
        ++out.evaluations;
      }
    }
    return s;
  };
  T sum = level_sum(0);
  T prev = sum * (half * tanh_sinh_rule(0).step);
  double step = tanh_sinh_rule(0).step;
  for (int level = 1; level <= max_level; ++level) {
    sum += level_sum(level);
    step *= 0.5;
    const T cur = sum * (half * step);
    const double diff = std::abs(cur - prev);
    out.value = cur;
    out.error = diff;
    if (diff <= tol * std::max(1.0, std::abs(cur)) && level >= 2) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

}  // namespace gsf
