#include "gsf/eval.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "gsf/density.hpp"
#include "gsf/kernels.hpp"
#include "gsf/quadrature.hpp"
#include "gsf/simplexmap.hpp"

namespace gsf {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kInitialNodes = 8;

Complex pair(const Eigen::VectorXcd& lam, const Eigen::VectorXd& h) {
  return (lam.array() * h.cast<Complex>().array()).sum();
}

void require_finite(const Eigen::VectorXcd& l) {
  if (l.size() < 1) throw std::invalid_argument("spectral parameter must have at least one entry");
  for (Eigen::Index k = 0; k < l.size(); ++k)
    if (!std::isfinite(l(k).real()) || !std::isfinite(l(k).imag()))
      throw std::invalid_argument("spectral parameter entries must be finite");
}

}  // namespace

SpectralParam::SpectralParam(Eigen::VectorXcd lambda) : l_(std::move(lambda)) { require_finite(l_); }

SpectralParam::SpectralParam(std::initializer_list<Complex> lambda) : l_(lambda.size()) {
  Eigen::Index k = 0;
  for (Complex v : lambda) l_(k++) = v;
  require_finite(l_);
}

Complex SpectralParam::pairing(const Eigen::VectorXd& x) const {
  if (x.size() != l_.size()) throw std::invalid_argument("pairing: size mismatch");
  return (l_.array() * x.cast<Complex>().array()).sum();
}

SpectralParam SpectralParam::reduced() const {
  const Eigen::Index n = l_.size();
  if (n < 2) throw std::invalid_argument("reduced: needs n >= 2");
  return SpectralParam(Eigen::VectorXcd(l_.head(n - 1).array() - l_(n - 1)));
}

SpectralParam SpectralParam::shifted(Complex c, double m) const {
  return SpectralParam(Eigen::VectorXcd(l_ + c * rho_vector(size(), m).cast<Complex>()));
}

Eigen::VectorXd rho_vector(int n, double m) {
  Eigen::VectorXd rho(n);
  for (int k = 1; k <= n; ++k) rho(k - 1) = 0.5 * m * (n + 1 - 2 * k);
  return rho;
}

const char* to_string(Method m) { return m == Method::quad ? "quad" : "mc"; }

namespace {

// Nested tensor quadrature of the rank recursion with a fixed node count per dimension.
// Box route (eta variables) yields phi (trigonometric) or psi (rational); the simplex
// route (gamma variables) yields chi (trigonometric) or psi (rational).
class Recursion {
 public:
  Recursion(double m, Setting setting, Route route, int nodes)
      : m_(m), setting_(setting), route_(route), nodes_(nodes) {}

  Complex operator()(const Eigen::VectorXcd& lam, const Eigen::VectorXd& x) const {
    const Eigen::Index n = x.size();
    if (n == 1) return std::exp(kI * lam(0) * x(0));
    const BlockStructure blocks = block_structure(CartanPoint(x));
    if (blocks.r() == 1) return std::exp(kI * blocks.levels(0) * lam.sum());
    const Complex phase = std::exp(kI * lam(n - 1) * blocks.trace());
    const Eigen::VectorXcd lam0 = lam.head(n - 1).array() - lam(n - 1);
    const Complex integral = route_ == Route::box ? box(lam0, blocks) : simplex(lam0, blocks);
    return phase * integral;
  }

 private:
  Complex box(const Eigen::VectorXcd& lam0, const BlockStructure& blocks) const {
    const int d = blocks.r() - 1;
    const auto up = upper_exponents(blocks, m_);
    const auto lo = lower_exponents(blocks, m_);
    const auto& a = blocks.levels;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<JacobiRule> rules;
    for (int k = 0; k < d; ++k) {
      // nearest level beyond each end whose factor has a nonzero exponent
      double gap_hi = inf, gap_lo = inf;
      for (int p = 0; p < k; ++p)
        if (0.5 * m_ * blocks.mults[p] != 1.0) gap_hi = std::min(gap_hi, a(p) - a(k));
      for (int p = k + 2; p <= d; ++p)
        if (0.5 * m_ * blocks.mults[p] != 1.0) gap_lo = std::min(gap_lo, a(k + 1) - a(p));
      rules.push_back(graded_jacobi_rule(a(k + 1), a(k), up[k], lo[k], gap_hi, gap_lo, nodes_));
    }
    const double lnorm = log_normalizer(blocks, m_);
    Eigen::VectorXd eta(d);
    Complex acc{};
    std::function<void(int, double)> walk = [&](int k, double w) {
      if (k == d) {
        const double weight = w * std::exp(lnorm + log_box_density_smooth(eta, blocks, m_, setting_));
        acc += weight * (*this)(lam0, assemble_xi(blocks, eta));
        return;
      }
      const JacobiRule& rule = rules[k];
      for (int i = 0; i < rule.size(); ++i) {
        eta(k) = rule.nodes(i);
        walk(k + 1, w * rule.weights(i));
      }
    };
    walk(0, 1.0);
    return acc;
  }

  Complex simplex(const Eigen::VectorXcd& lam0, const BlockStructure& blocks) const {
    const int r = blocks.r();
    Eigen::VectorXd conc(r);
    for (int i = 0; i < r; ++i) conc(i) = 0.5 * m_ * blocks.mults[i];
    const auto rules = stick_breaking_rules(conc, nodes_);
    const NodeTransform transform(blocks, setting_);
    Eigen::VectorXd gamma(r);
    Complex acc{};
    std::function<void(int, double, double)> walk = [&](int k, double w, double rest) {
      if (k == r - 1) {
        gamma(k) = rest;
        acc += w * (*this)(lam0, assemble_xi(blocks, transform.roots(gamma)));
        return;
      }
      const JacobiRule& rule = rules[k];
      for (int i = 0; i < rule.size(); ++i) {
        gamma(k) = rest * rule.nodes(i);
        walk(k + 1, w * rule.weights(i), rest * (1.0 - rule.nodes(i)));
      }
    };
    walk(0, 1.0, 1.0);
    return acc;
  }

  double m_;
  Setting setting_;
  Route route_;
  int nodes_;
};

// Total nesting depth: the top level contributes r - 1 dimensions, each lower level
// (generically regular) one fewer than its rank.
int nested_dimension(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  if (n == 1) return 0;
  const BlockStructure blocks = block_structure(CartanPoint(x));
  if (blocks.r() == 1) return 0;
  return (blocks.r() - 1) + (n - 1) * (n - 2) / 2;
}

int grow(int nodes) { return nodes + std::max(2, nodes / 4); }

EvalResult run_quad(const Eigen::VectorXcd& lam, const Eigen::VectorXd& x, double m,
                    Setting setting, Route route, const EvalOptions& opts) {
  EvalResult res;
  res.method = Method::quad;
  const int dim = nested_dimension(x);
  if (dim == 0) {
    res.value = Recursion(m, setting, route, 1)(lam, x);
    res.samples_or_nodes = 1;
    return res;
  }
  auto leaves = [&](int nodes) { return std::pow(static_cast<double>(nodes), dim); };
  if (!opts.adaptive && opts.nodes > 0) {
    res.value = Recursion(m, setting, route, opts.nodes)(lam, x);
    res.samples_or_nodes = opts.nodes;
    if (opts.skip_error_estimate) return res;
    const int coarse = std::max(2, opts.nodes - std::max(2, opts.nodes / 4));
    const Complex other = Recursion(m, setting, route, coarse)(lam, x);
    res.error_estimate = std::abs(res.value - other);
    res.converged = res.error_estimate <= opts.tol * std::max(1.0, std::abs(res.value));
    return res;
  }
  int nodes = opts.nodes > 0 ? opts.nodes : kInitialNodes;
  Complex prev = Recursion(m, setting, route, nodes)(lam, x);
  double diff = -1.0;
  for (;;) {
    const int next = std::min(grow(nodes), opts.max_nodes);
    if (next <= nodes || leaves(next) > opts.max_evaluations) {
      res.value = prev;
      res.error_estimate = diff >= 0.0 ? diff : std::max(1.0, std::abs(prev));
      res.samples_or_nodes = nodes;
      res.converged = false;
      return res;
    }
    const Complex cur = Recursion(m, setting, route, next)(lam, x);
    diff = std::abs(cur - prev);
    nodes = next;
    prev = cur;
    if (diff <= opts.tol * std::max(1.0, std::abs(cur))) {
      res.value = cur;
      res.error_estimate = diff;
      res.samples_or_nodes = nodes;
      return res;
    }
  }
}

EvalResult run_mc(const std::function<Complex(const Eigen::VectorXd&)>& z,
                  const Eigen::VectorXd& x, double m, Setting setting, const EvalOptions& opts) {
  if (opts.samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  const std::size_t count = opts.samples;
  std::vector<Complex> values(count);
  Complex sum{};
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(opts.seed, i);
    values[i] = z(sample_point(x, m, setting, rng));
    sum += values[i];
  }
  const Complex mean = sum / static_cast<double>(count);
  double ss = 0.0;
  for (const Complex& v : values) ss += std::norm(v - mean);
  EvalResult res;
  res.method = Method::mc;
  res.value = mean;
  res.error_estimate = std::sqrt(ss / (static_cast<double>(count) * (count - 1)));
  res.samples_or_nodes = static_cast<long long>(count);
  return res;
}

struct Prepared {
  Eigen::VectorXcd lam;
  Eigen::VectorXd x;
};

Prepared prepare(const SpectralParam& lambda, const CartanPoint& X, double m) {
  require_positive_multiplicity(m);
  if (lambda.size() != X.size()) throw std::invalid_argument("lambda and X must have the same length");
  return {lambda.values(), project_to_chamber(X).sorted.entries()};
}

}  // namespace

EvalResult eval_chi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts) {
  const Prepared p = prepare(lambda, X, m);
  if (opts.method == Method::mc) {
    const Eigen::VectorXcd lam = p.lam;
    return run_mc([&](const Eigen::VectorXd& h) { return std::exp(kI * pair(lam, h)); },
                  p.x, m, Setting::trigonometric, opts);
  }
  if (opts.route == Route::simplex)
    return run_quad(p.lam, p.x, m, Setting::trigonometric, Route::simplex, opts);
  const Eigen::VectorXcd shifted = lambda.shifted(-kI, m).values();
  return run_quad(shifted, p.x, m, Setting::trigonometric, Route::box, opts);
}

EvalResult eval_phi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts) {
  const Prepared p = prepare(lambda, X, m);
  const Eigen::VectorXcd shifted = lambda.shifted(kI, m).values();
  if (opts.method == Method::mc) {
    return run_mc([&](const Eigen::VectorXd& h) { return std::exp(kI * pair(shifted, h)); },
                  p.x, m, Setting::trigonometric, opts);
  }
  if (opts.route == Route::simplex)
    return run_quad(shifted, p.x, m, Setting::trigonometric, Route::simplex, opts);
  return run_quad(p.lam, p.x, m, Setting::trigonometric, Route::box, opts);
}

EvalResult eval_psi(const SpectralParam& lambda, const CartanPoint& X, double m,
                    const EvalOptions& opts) {
  const Prepared p = prepare(lambda, X, m);
  if (opts.method == Method::mc) {
    const Eigen::VectorXcd lam = p.lam;
    return run_mc([&](const Eigen::VectorXd& h) { return std::exp(kI * pair(lam, h)); },
                  p.x, m, Setting::rational, opts);
  }
  const Route route = opts.route == Route::simplex ? Route::simplex : Route::box;
  return run_quad(p.lam, p.x, m, Setting::rational, route, opts);
}

std::vector<LimitProbe> rational_limit_probe(const SpectralParam& lambda, const CartanPoint& X,
                                             double m, const std::vector<double>& epsilons,
                                             const EvalOptions& opts) {
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw std::invalid_argument("epsilons must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw std::invalid_argument("epsilons must be decreasing");
  }
  EvalOptions quad = opts;
  quad.method = Method::quad;
  const EvalResult psi = eval_psi(lambda, X, m, quad);
  std::vector<LimitProbe> out;
  for (double eps : epsilons) {
    const SpectralParam scaled(Eigen::VectorXcd(lambda.values() / eps));
    const CartanPoint shrunk(Eigen::VectorXd(eps * X.entries()));
    const EvalResult phi = eval_phi(scaled, shrunk, m, quad);
    out.push_back({eps, std::abs(psi.value - phi.value), psi.error_estimate + phi.error_estimate});
  }
  return out;
}

}  // namespace gsf
