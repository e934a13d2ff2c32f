#include "gsf/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gsf/eval.hpp"
#include "gsf/simplexmap.hpp"

namespace gsf {

Eigen::VectorXd sample_point(const Eigen::VectorXd& x_sorted, double m, Setting setting,
                             CounterRng& rng) {
  const Eigen::Index n = x_sorted.size();
  if (n == 1) return x_sorted;
  const BlockStructure blocks = block_structure(CartanPoint(x_sorted));
  if (blocks.r() == 1) return blocks.expand().entries();
  Eigen::VectorXd conc(blocks.r());
  for (int i = 0; i < blocks.r(); ++i) conc(i) = 0.5 * m * blocks.mults[i];
  const SimplexWeight gamma = DirichletSampler(conc, 0).draw(rng);
  const Eigen::VectorXd xi =
      assemble_xi(blocks, NodeTransform(blocks, setting).roots(gamma.values()));
  Eigen::VectorXd h(n);
  h.head(n - 1) = sample_point(xi, m, setting, rng);
  h(n - 1) = blocks.trace() - h.head(n - 1).sum();
  return h;
}

Eigen::MatrixXd sample_measure(const CartanPoint& X, double m, Setting setting, std::size_t count,
                               std::uint64_t seed) {
  require_positive_multiplicity(m);
  const Eigen::VectorXd x = project_to_chamber(X).sorted.entries();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(count), x.size());
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, i);
    out.row(static_cast<Eigen::Index>(i)) = sample_point(x, m, setting, rng).transpose();
  }
  return out;
}

MonteCarloValue dual_abel(const std::function<Complex(const Eigen::VectorXd&)>& f,
                          const CartanPoint& X, double m, Setting setting, std::size_t samples,
                          std::uint64_t seed) {
  require_positive_multiplicity(m);
  if (samples < 2) throw std::invalid_argument("dual_abel needs at least two samples");
  const Eigen::VectorXd x = project_to_chamber(X).sorted.entries();
  const int n = static_cast<int>(x.size());
  const Eigen::VectorXd rho = rho_vector(n, m);
  std::vector<int> perm(n);
  auto symmetrized = [&](const Eigen::VectorXd& h) {
    std::iota(perm.begin(), perm.end(), 0);
    Complex acc{};
    int count = 0;
    do {
      acc += f(permute(h, perm));
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc / static_cast<double>(count);
  };
  std::vector<Complex> values(samples);
  Complex sum{};
  for (std::size_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, i);
    const Eigen::VectorXd h = sample_point(x, m, setting, rng);
    const double weight = setting == Setting::trigonometric ? std::exp(-rho.dot(h)) : 1.0;
    values[i] = weight * symmetrized(h);
    sum += values[i];
  }
  MonteCarloValue out;
  out.samples = samples;
  out.value = sum / static_cast<double>(samples);
  double ss = 0.0;
  for (const Complex& v : values) ss += std::norm(v - out.value);
  out.std_error = std::sqrt(ss / (static_cast<double>(samples) * (samples - 1)));
  return out;
}

Eigen::VectorXd FiberDomain::full_eta(const Eigen::VectorXd& free) const {
  const int r = blocks.r();
  double pinned = 0.0;
  for (int i = 0; i < r; ++i) pinned += (blocks.mults[i] - 1) * blocks.levels(i);
  Eigen::VectorXd eta(r - 1);
  eta.head(r - 2) = free;
  eta(r - 2) = head.sum() - pinned - free.sum();
  return eta;
}

Eigen::VectorXd FiberDomain::xi(const Eigen::VectorXd& free) const {
  return assemble_xi(blocks, full_eta(free));
}

namespace {

// Half-plane clipping of a convex polygon by a.p <= b.
std::vector<Eigen::VectorXd> clip(const std::vector<Eigen::VectorXd>& poly, const Eigen::Vector2d& a,
                                  double b) {
  std::vector<Eigen::VectorXd> out;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::VectorXd& p = poly[i];
    const Eigen::VectorXd& q = poly[(i + 1) % k];
    const double sp = a.dot(p) - b, sq = a.dot(q) - b;
    if (sp <= 0.0) out.push_back(p);
    if ((sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

}  // namespace

FiberDomain fiber_domain(const CartanPoint& H, const CartanPoint& X) {
  if (H.size() != X.size()) throw std::invalid_argument("H and X must have the same length");
  const BlockStructure blocks = block_structure(project_to_chamber(X).sorted);
  if (blocks.r() < 2) throw std::invalid_argument("fiber undefined for X a multiple of the identity");
  if (rado_membership(H, X) == HullPosition::outside) throw std::domain_error("not in hull");
  const int r = blocks.r();
  if (r > 4) throw std::domain_error("unsupported rank");
  const int n = blocks.n();

  FiberDomain dom;
  dom.blocks = blocks;
  dom.head = H.entries().head(n - 1);

  // Constraints c . eta_full <= e on all r-1 coordinates, then eta_{r-1} eliminated.
  std::vector<Eigen::VectorXd> cs;
  std::vector<double> es;
  for (int k = 0; k + 1 < r; ++k) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(r - 1);
    c(k) = 1.0;
    cs.push_back(c);
    es.push_back(blocks.levels(k));
    cs.push_back(-c);
    es.push_back(-blocks.levels(k + 1));
  }
  // Rado: sum of the j largest of H' <= xi_1 + ... + xi_j for j = 1..n-2.
  Eigen::VectorXd hs = dom.head;
  std::sort(hs.data(), hs.data() + hs.size(), std::greater<>());
  const Eigen::VectorXd zero_eta = Eigen::VectorXd::Zero(r - 1);
  const Eigen::VectorXd xi0 = assemble_xi(blocks, zero_eta);
  for (int j = 1; j <= n - 2; ++j) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(r - 1);
    for (int k = 0; k + 1 < r; ++k)
      if (blocks.prefix[k + 1] - 1 < j) c(k) = -1.0;
    cs.push_back(c);
    es.push_back(xi0.head(j).sum() - hs.head(j).sum());
  }
  double pinned = 0.0;
  for (int i = 0; i < r; ++i) pinned += (blocks.mults[i] - 1) * blocks.levels(i);
  const double total = dom.head.sum() - pinned;
  const int d = r - 2;
  dom.A.resize(static_cast<Eigen::Index>(cs.size()), d);
  dom.b.resize(static_cast<Eigen::Index>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double last = cs[i](r - 2);
    for (int k = 0; k < d; ++k) dom.A(static_cast<Eigen::Index>(i), k) = cs[i](k) - last;
    dom.b(static_cast<Eigen::Index>(i)) = es[i] - last * total;
  }

  const double tol = 1e-12 * std::max(1.0, blocks.levels(0) - blocks.levels(r - 1));
  if (d == 0) {
    if ((dom.b.array() >= -tol).all()) dom.vertices.push_back(Eigen::VectorXd(0));
  } else if (d == 1) {
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    bool feasible = true;
    for (Eigen::Index i = 0; i < dom.A.rows(); ++i) {
      const double a = dom.A(i, 0), bb = dom.b(i);
      if (std::abs(a) < 1e-14) {
        if (bb < -tol) feasible = false;
      } else if (a > 0.0) {
        hi = std::min(hi, bb / a);
      } else {
        lo = std::max(lo, bb / a);
      }
    }
    if (feasible && lo <= hi + tol) {
      dom.vertices.push_back(Eigen::VectorXd::Constant(1, lo));
      dom.vertices.push_back(Eigen::VectorXd::Constant(1, std::max(lo, hi)));
    }
  } else {
    std::vector<Eigen::VectorXd> poly;
    const double big_lo = blocks.levels(r - 1) - 1.0, big_hi = blocks.levels(0) + 1.0;
    for (Eigen::Vector2d p : {Eigen::Vector2d(big_lo, big_lo), Eigen::Vector2d(big_hi, big_lo),
                              Eigen::Vector2d(big_hi, big_hi), Eigen::Vector2d(big_lo, big_hi)})
      poly.push_back(p);
    for (Eigen::Index i = 0; i < dom.A.rows() && !poly.empty(); ++i)
      poly = clip(poly, Eigen::Vector2d(dom.A(i, 0), dom.A(i, 1)), dom.b(i) + tol);
    dom.vertices = poly;
  }
  return dom;
}

namespace {

// log of the full recursion weight S~ prod f^m (or T d_0^m) at a fiber point.
double log_fiber_weight(const Eigen::VectorXd& eta, const BlockStructure& blocks, double m,
                        Setting setting) {
  double lw = log_box_density_smooth(eta, blocks, m, setting);
  const auto up = upper_exponents(blocks, m);
  const auto lo = lower_exponents(blocks, m);
  for (int k = 0; k + 1 < blocks.r(); ++k) {
    const double du = blocks.levels(k) - eta(k), dl = eta(k) - blocks.levels(k + 1);
    if (du < 0.0 || dl < 0.0) return -std::numeric_limits<double>::infinity();
    if (up[k] != 0.0) lw += up[k] * std::log(du);
    if (lo[k] != 0.0) lw += lo[k] * std::log(dl);
  }
  return lw;
}

// Kernel at a point known to lie in C(X): the boundary is judged by exact
// inequalities, so fiber nodes a few ulps inside an end keep their finite value.
double kernel_open(const CartanPoint& H, const CartanPoint& X, double m, Setting setting,
                   const KernelOptions& opts) {
  const BlockStructure blocks = block_structure(project_to_chamber(X).sorted);
  if (blocks.n() == 2) {
    const double x1 = blocks.levels(0), x2 = blocks.levels(1);
    const double d1 = x1 - H[0], d2 = H[0] - x2;
    if (!(d1 > 0.0 && d2 > 0.0)) return 0.0;
    const double e = 0.5 * m - 1.0;
    return std::exp(log_normalizer(blocks, m) + (1.0 - m) * log_root_factor(setting, x1 - x2) +
                    e * (log_root_factor(setting, d1) + log_root_factor(setting, d2)));
  }
  const FiberDomain dom = fiber_domain(H, X);
  if (dom.empty()) return 0.0;
  const double lnorm = log_normalizer(blocks, m);
  const CartanPoint head(dom.head);

  auto integrand = [&](const Eigen::VectorXd& free) {
    const Eigen::VectorXd eta = dom.full_eta(free);
    const double lw = log_fiber_weight(eta, blocks, m, setting);
    if (!std::isfinite(lw)) return 0.0;
    const Eigen::VectorXd xi = assemble_xi(blocks, eta);
    // xi collapsed to a multiple of the identity: an end point of the fiber
    if (xi.maxCoeff() - xi.minCoeff() <= kBlockTolerance * std::max(1.0, xi.cwiseAbs().maxCoeff()))
      return 0.0;
    const double inner = kernel_open(head, CartanPoint(xi), m, setting, opts);
    if (inner == 0.0) return 0.0;
    return inner * std::exp(lnorm + lw);
  };

  double value = 0.0;
  if (dom.dimension() == 0) {
    value = integrand(Eigen::VectorXd(0));
  } else if (dom.dimension() == 1) {
    const double lo = dom.vertices[0](0), hi = dom.vertices[1](0);
    value = tanh_sinh_integrate<double>(
                [&](double t) { return integrand(Eigen::VectorXd::Constant(1, t)); }, lo, hi,
                opts.tol, opts.max_level)
                .value;
  } else {
    std::vector<double> xs;
    for (const auto& v : dom.vertices) xs.push_back(v(0));
    std::sort(xs.begin(), xs.end());
    auto y_range = [&](double x) {
      double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < dom.A.rows(); ++i) {
        const double a0 = dom.A(i, 0), a1 = dom.A(i, 1);
        if (std::abs(a1) < 1e-14) continue;
        const double bound = (dom.b(i) - a0 * x) / a1;
        if (a1 > 0.0)
          hi = std::min(hi, bound);
        else
          lo = std::max(lo, bound);
      }
      return std::make_pair(lo, hi);
    };
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
      if (!(xs[s + 1] > xs[s])) continue;
      value += tanh_sinh_integrate<double>(
                   [&](double x) {
                     const auto [ylo, yhi] = y_range(x);
                     if (!(yhi > ylo)) return 0.0;
                     return tanh_sinh_integrate<double>(
                                [&](double y) { return integrand(Eigen::Vector2d(x, y)); }, ylo,
                                yhi, opts.tol, opts.max_level)
                         .value;
                   },
                   xs[s], xs[s + 1], opts.tol, opts.max_level)
                   .value;
    }
  }
  return value;
}

}  // namespace

KernelValue<double> kernel_K(const CartanPoint& H, const CartanPoint& X, double m, Setting setting,
                             const KernelOptions& opts) {
  require_positive_multiplicity(m);
  const int n = X.size();
  if (H.size() != n) throw std::invalid_argument("H and X must have the same length");
  if (n < 2) throw std::invalid_argument("kernel needs n >= 2");
  if (n > 4) throw std::domain_error("unsupported rank");
  if (n == 2) return kernel_K2(H, X, m, setting);
  const BlockStructure blocks = block_structure(project_to_chamber(X).sorted);
  if (blocks.r() < 2) throw std::invalid_argument("kernel undefined for X a multiple of the identity");

  const HullPosition pos = rado_membership(H, X);
  if (pos == HullPosition::outside) return {0.0, KernelStatus::outside};
  if (pos == HullPosition::boundary && rado_slack(H, X) <= 0.0) {
    if (m > 2.0) return {0.0, KernelStatus::boundary};
    if (m < 2.0) return {std::numeric_limits<double>::infinity(), KernelStatus::singular};
  }
  const KernelStatus status = pos == HullPosition::boundary ? KernelStatus::boundary : KernelStatus::interior;
  const double value = kernel_open(H, X, m, setting, opts);
  if (!std::isfinite(value)) return {value, KernelStatus::singular};
  return {value, status};
}

}  // namespace gsf
