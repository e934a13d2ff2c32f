#include "gsf/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsf {

namespace {

double real_part(double x) { return x; }
double real_part(Complex z) { return z.real(); }

void require_multiplicity(double m) { require_positive_multiplicity(m); }
void require_multiplicity(Complex m) { require_positive_multiplicity(m); }

void require_nontrivial(const BlockStructure& blocks) {
  if (blocks.r() < 2) throw std::invalid_argument("weight undefined for X a multiple of the identity");
}

void require_eta_size(const Eigen::VectorXd& eta, const BlockStructure& blocks) {
  if (eta.size() != blocks.r() - 1) throw std::invalid_argument("expected r-1 interlacing coordinates");
}

// Log of the weight without its endpoint monomials; the eta pair factors carry
// the given power (1 - m for S~ alone, 1 for the full recursion weight).
template <class M>
M log_smooth_impl(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m, Setting s,
                  M pair_power) {
  const int r = blocks.r();
  const auto& a = blocks.levels;
  const auto& nn = blocks.mults;
  M acc{};
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      acc += (1.0 - m * (0.5 * (nn[i] + nn[j]))) * log_root_factor(s, a(i) - a(j));
  for (int i = 0; i + 1 < r; ++i)
    for (int j = i + 1; j + 1 < r; ++j) acc += pair_power * log_root_factor(s, eta(i) - eta(j));
  for (int p = 0; p < r; ++p) {
    const M e = m * (0.5 * nn[p]) - 1.0;
    double lp = 0.0;
    for (int k = 0; k + 1 < r; ++k) {
      if (k == p) {
        lp += log_root_factor_ratio(s, a(p) - eta(k));
      } else if (k == p - 1) {
        lp += log_root_factor_ratio(s, eta(k) - a(p));
      } else if (k < p) {
        lp += log_root_factor(s, eta(k) - a(p));
      } else {
        lp += log_root_factor(s, a(p) - eta(k));
      }
    }
    acc += e * lp;
  }
  return acc;
}

// Full weight with explicit handling of vanishing factors.
template <class M>
M weight_full(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m, Setting s) {
  require_multiplicity(m);
  require_nontrivial(blocks);
  require_eta_size(eta, blocks);
  const int r = blocks.r();
  const auto& a = blocks.levels;
  const auto& nn = blocks.mults;
  const double tol = 1e-14 * std::max(1.0, a(0) - a(r - 1));
  M acc{};
  bool zero = false, singular = false;
  auto factor = [&](M e, double d) {
    if (d < -tol) throw std::domain_error("not interlaced");
    if (d <= tol) {
      if (e == M{}) return;
      if (real_part(e) > 0.0)
        zero = true;
      else
        singular = true;
      return;
    }
    acc += e * log_root_factor(s, d);
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) factor(1.0 - m * (0.5 * (nn[i] + nn[j])), a(i) - a(j));
  for (int i = 0; i + 1 < r; ++i)
    for (int j = i + 1; j + 1 < r; ++j) factor(1.0 - m, eta(i) - eta(j));
  for (int p = 0; p < r; ++p) {
    const M e = m * (0.5 * nn[p]) - 1.0;
    for (int k = 0; k + 1 < r; ++k) factor(e, k < p ? eta(k) - a(p) : a(p) - eta(k));
  }
  if (singular) throw std::domain_error("singular boundary point");
  if (zero) return M{};
  return std::exp(acc);
}

}  // namespace

template <class M>
M log_normalizer(const BlockStructure& blocks, M m) {
  M acc = log_gamma(m * (0.5 * blocks.n()));
  for (int ni : blocks.mults) acc -= log_gamma(m * (0.5 * ni));
  return acc;
}

template <class M>
std::vector<M> upper_exponents(const BlockStructure& blocks, M m) {
  std::vector<M> e;
  for (int k = 0; k + 1 < blocks.r(); ++k) e.push_back(m * (0.5 * blocks.mults[k]) - 1.0);
  return e;
}

template <class M>
std::vector<M> lower_exponents(const BlockStructure& blocks, M m) {
  std::vector<M> e;
  for (int k = 0; k + 1 < blocks.r(); ++k) e.push_back(m * (0.5 * blocks.mults[k + 1]) - 1.0);
  return e;
}

template <class M>
WeightSplit<M> split_weight(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m,
                            Setting setting) {
  require_nontrivial(blocks);
  require_eta_size(eta, blocks);
  return {log_smooth_impl(eta, blocks, m, setting, M(1.0) - m), upper_exponents(blocks, m),
          lower_exponents(blocks, m)};
}

template <class M>
M log_box_density_smooth(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m,
                         Setting setting) {
  return log_smooth_impl(eta, blocks, m, setting, M(1.0));
}

template <class M>
M weight_S_tilde(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m) {
  return weight_full(eta, blocks, m, Setting::trigonometric);
}

template <class M>
M weight_T(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m) {
  return weight_full(eta, blocks, m, Setting::rational);
}

const char* to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::interior: return "interior";
    case KernelStatus::outside: return "outside";
    case KernelStatus::boundary: return "boundary";
    case KernelStatus::singular: return "singular";
  }
  return "?";
}

template <class M>
KernelValue<M> kernel_K2(const CartanPoint& H, const CartanPoint& X, M m, Setting setting) {
  require_multiplicity(m);
  if (H.size() != 2 || X.size() != 2) throw std::invalid_argument("kernel_K2 needs n = 2");
  const BlockStructure blocks = block_structure(project_to_chamber(X).sorted);
  if (blocks.r() < 2) throw std::invalid_argument("kernel undefined for X a multiple of the identity");
  const double x1 = blocks.levels(0), x2 = blocks.levels(1);
  const M e = m * 0.5 - 1.0;
  const M log_base = log_normalizer(blocks, m) + (1.0 - m) * log_root_factor(setting, x1 - x2);
  const HullPosition pos = rado_membership(H, X);
  switch (pos) {
    case HullPosition::outside:
      return {M{}, KernelStatus::outside};
    case HullPosition::boundary:
      // inside the band but strictly inside in floating point: the formula still applies
      if (x1 - H[0] > 0.0 && H[0] - x2 > 0.0) break;
      if (e == M{}) return {std::exp(log_base), KernelStatus::boundary};
      if (real_part(e) > 0.0) return {M{}, KernelStatus::boundary};
      return {M(std::numeric_limits<double>::infinity()), KernelStatus::singular};
    case HullPosition::interior:
      break;
  }
  // h2 = x1 + x2 - h1, so f(x1 - h2) = f(h1 - x2); either order of H gives the same pair
  const double h1 = H[0];
  const double d1 = x1 - h1, d2 = h1 - x2;
  const KernelStatus status = pos == HullPosition::boundary ? KernelStatus::boundary : KernelStatus::interior;
  return {std::exp(log_base + e * (log_root_factor(setting, d1) + log_root_factor(setting, d2))), status};
}

#define GSF_INSTANTIATE(M)                                                                   \
  template M log_normalizer<M>(const BlockStructure&, M);                                    \
  template std::vector<M> upper_exponents<M>(const BlockStructure&, M);                      \
  template std::vector<M> lower_exponents<M>(const BlockStructure&, M);                      \
  template WeightSplit<M> split_weight<M>(const Eigen::VectorXd&, const BlockStructure&, M,  \
                                          Setting);                                          \
  template M log_box_density_smooth<M>(const Eigen::VectorXd&, const BlockStructure&, M,     \
                                       Setting);                                             \
  template M weight_S_tilde<M>(const Eigen::VectorXd&, const BlockStructure&, M);            \
  template M weight_T<M>(const Eigen::VectorXd&, const BlockStructure&, M);                  \
  template KernelValue<M> kernel_K2<M>(const CartanPoint&, const CartanPoint&, M, Setting);

GSF_INSTANTIATE(double)
GSF_INSTANTIATE(Complex)

#undef GSF_INSTANTIATE

}  // namespace gsf
