#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gsf/cartan.hpp"
#include "gsf/special.hpp"

namespace gsf {

/// Multiplicity together with the setting and the block structure of X.
/// M is double for the tested real case; std::complex<double> is accepted for
/// kernel evaluation only, with no positivity claims attached.
template <class M>
struct KernelParams {
  M m{};
  Setting setting = Setting::trigonometric;
  BlockStructure blocks;
};

/// log Gamma(mn/2) - sum_i log Gamma(m n_i/2).
template <class M>
M log_normalizer(const BlockStructure& blocks, M m);

/// Jacobi exponent of (a_k - eta_k): m n_k/2 - 1, k = 0..r-2.
template <class M>
std::vector<M> upper_exponents(const BlockStructure& blocks, M m);

/// Jacobi exponent of (eta_k - a_{k+1}): m n_{k+1}/2 - 1, k = 0..r-2.
template <class M>
std::vector<M> lower_exponents(const BlockStructure& blocks, M m);

/// The weight S~ (trigonometric) or T (rational) written as
///   exp(log_smooth) * prod_k (a_k - eta_k)^upper[k] * (eta_k - a_{k+1})^lower[k].
/// Only the two endpoint factors of each eta_k can vanish inside the box, so
/// log_smooth stays finite for strictly interlacing eta.
template <class M>
struct WeightSplit {
  M log_smooth{};
  std::vector<M> upper;
  std::vector<M> lower;
};

template <class M>
WeightSplit<M> split_weight(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m,
                            Setting setting);

/// Smooth log part of the full recursion weight S~ * prod f(eta_i - eta_j)^m
/// (f = sinh or the identity). The eta pair factors enter with net power one.
template <class M>
M log_box_density_smooth(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m,
                         Setting setting);

/// S~(eta, X) for strictly interlacing eta. Boundary points are accepted only
/// when every vanishing factor carries a nonnegative exponent; otherwise
/// std::domain_error("singular boundary point") is thrown.
template <class M>
M weight_S_tilde(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m);

/// Rational analogue T(eta, X) of S~.
template <class M>
M weight_T(const Eigen::VectorXd& eta, const BlockStructure& blocks, M m);

enum class KernelStatus { interior, outside, boundary, singular };

const char* to_string(KernelStatus s);

template <class M>
struct KernelValue {
  M value{};
  KernelStatus status = KernelStatus::interior;
};

/// Rank-two kernel
///   Gamma(m)/Gamma(m/2)^2 f(x1-x2)^{1-m} [f(x1-h1) f(x1-h2)]^{m/2-1},
/// a density in h1 with h2 = x1 + x2 - h1. On the boundary of C(X) the value
/// is 0 for m > 2, the limit for m = 2 and flagged singular for m < 2. Points
/// in the tolerance band of rado_membership that are strictly inside in floating
/// point keep the formula value, with status boundary.
template <class M>
KernelValue<M> kernel_K2(const CartanPoint& H, const CartanPoint& X, M m, Setting setting);

}  // namespace gsf
