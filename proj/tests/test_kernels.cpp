#include <doctest.h>

#include <cmath>
#include <random>

#include "gsf/kernels.hpp"

using namespace gsf;

namespace {

BlockStructure levels(std::initializer_list<double> a) { return block_structure(CartanPoint(a)); }

}  // namespace

TEST_CASE("S~ at n = 2, m = 2 is 1/sinh(x1 - x2)") {
  const auto b = levels({1.0, -1.0});
  for (double eta : {-0.9, 0.0, 0.3, 0.99})
    CHECK(weight_S_tilde(Eigen::VectorXd::Constant(1, eta), b, 2.0) ==
          doctest::Approx(1.0 / std::sinh(2.0)).epsilon(1e-14));
  CHECK(1.0 / std::sinh(2.0) == doctest::Approx(0.275721).epsilon(1e-6));
}

TEST_CASE("S~ at m = 2 is d(X)^-1 d(xi)^-1 for regular X") {
  const Eigen::Vector3d a(1.1, 0.2, -0.7);
  const Eigen::Vector2d eta(0.6, -0.1);
  const double dx = std::sinh(a(0) - a(1)) * std::sinh(a(0) - a(2)) * std::sinh(a(1) - a(2));
  const double dxi = std::sinh(eta(0) - eta(1));
  CHECK(weight_S_tilde(eta, levels({1.1, 0.2, -0.7}), 2.0) == doctest::Approx(1.0 / (dx * dxi)).epsilon(1e-13));
}

TEST_CASE("T at n = 2") {
  const auto b = levels({1.0, -1.0});
  CHECK(weight_T(Eigen::VectorXd::Constant(1, 0.0), b, 2.0) == doctest::Approx(0.5));
  const double m = 3.3, eta = 0.4;
  const double want = std::pow(2.0, 1 - m) * std::pow((1 - eta) * (eta + 1), m / 2 - 1);
  CHECK(weight_T(Eigen::VectorXd::Constant(1, eta), b, m) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("T is homogeneous") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> t(0.05, 0.95);
  for (double m : {0.5, 1.0, 2.5, 4.0}) {
    const Eigen::Vector4d a(1.3, 0.4, 0.1, -0.9);
    const auto b = block_structure(CartanPoint(Eigen::VectorXd(a)));
    Eigen::Vector3d eta;
    for (int k = 0; k < 3; ++k) eta(k) = a(k + 1) + t(rng) * (a(k) - a(k + 1));
    // degree: level pairs (1 - m), eta pairs (1 - m), r (r - 1) endpoint factors (m/2 - 1)
    const double r = 4;
    const double degree = r * (r - 1) / 2 * (1 - m) + (r - 1) * (r - 2) / 2 * (1 - m) + r * (r - 1) * (m / 2 - 1);
    const double c = 1.7;
    const auto bc = block_structure(CartanPoint(Eigen::VectorXd(c * a)));
    const Eigen::VectorXd ceta = c * eta;
    CHECK(weight_T(ceta, bc, m) == doctest::Approx(std::pow(c, degree) * weight_T(Eigen::VectorXd(eta), b, m)).epsilon(1e-12));
  }
}

TEST_CASE("split weight reproduces the full weight") {
  const auto b = levels({1.0, 0.5, -0.2, -1.0});
  const Eigen::Vector3d eta(0.8, 0.1, -0.6);
  for (Setting s : {Setting::trigonometric, Setting::rational})
    for (double m : {0.7, 2.0, 3.5}) {
      const auto w = split_weight(Eigen::VectorXd(eta), b, m, s);
      double log = w.log_smooth;
      for (int k = 0; k < 3; ++k) {
        log += w.upper[k] * std::log(b.levels(k) - eta(k));
        log += w.lower[k] * std::log(eta(k) - b.levels(k + 1));
      }
      const double full = s == Setting::trigonometric ? weight_S_tilde(Eigen::VectorXd(eta), b, m)
                                                      : weight_T(Eigen::VectorXd(eta), b, m);
      CHECK(std::exp(log) == doctest::Approx(full).epsilon(1e-12));
    }
}

TEST_CASE("weights at the boundary") {
  const auto b = levels({1.0, -1.0});
  const Eigen::VectorXd end = Eigen::VectorXd::Constant(1, 1.0);
  CHECK(weight_T(end, b, 3.0) == 0.0);
  CHECK(weight_T(end, b, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(weight_T(end, b, 1.0), std::domain_error);
  CHECK_THROWS_AS(weight_T(Eigen::VectorXd::Constant(1, 1.5), b, 3.0), std::domain_error);
}

TEST_CASE("normalizer and exponents") {
  const auto b = levels({2.0, 2.0, 0.0});
  CHECK(log_normalizer(b, 1.0) == doctest::Approx(std::lgamma(1.5) - std::lgamma(1.0) - std::lgamma(0.5)));
  CHECK(upper_exponents(b, 1.0) == std::vector<double>{0.0});
  CHECK(lower_exponents(b, 1.0) == std::vector<double>{-0.5});
}

TEST_CASE("rank-two kernel") {
  const CartanPoint X{1.0, -1.0};
  const auto trig = kernel_K2(CartanPoint{0.3, -0.3}, X, 2.0, Setting::trigonometric);
  CHECK(trig.status == KernelStatus::interior);
  CHECK(trig.value == doctest::Approx(1.0 / std::sinh(2.0)));
  CHECK(kernel_K2(CartanPoint{0.3, -0.3}, X, 2.0, Setting::rational).value == doctest::Approx(0.5));
  CHECK(kernel_K2(CartanPoint{0.0, 0.0}, X, 4.0, Setting::rational).value == doctest::Approx(0.75));

  const double m = 1.3, h = 0.2;
  const double want = std::tgamma(m) / std::pow(std::tgamma(m / 2), 2) * std::pow(std::sinh(2.0), 1 - m) *
                      std::pow(std::sinh(1 - h) * std::sinh(1 + h), m / 2 - 1);
  CHECK(kernel_K2(CartanPoint{h, -h}, X, m, Setting::trigonometric).value == doctest::Approx(want).epsilon(1e-13));

  CHECK(kernel_K2(CartanPoint{1.2, -1.2}, X, m, Setting::rational).status == KernelStatus::outside);
  CHECK(kernel_K2(CartanPoint{1.0, -1.0}, X, 3.0, Setting::rational).value == 0.0);
  CHECK(kernel_K2(CartanPoint{1.0, -1.0}, X, 2.0, Setting::rational).value == doctest::Approx(0.5));
  CHECK(kernel_K2(CartanPoint{-1.0, 1.0}, X, 1.0, Setting::rational).status == KernelStatus::singular);

  const auto z = kernel_K2(CartanPoint{h, -h}, X, Complex(m, 0.0), Setting::trigonometric);
  CHECK(z.value.real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::abs(z.value.imag()) < 1e-14);
}
