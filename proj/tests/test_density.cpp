#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "checks.hpp"
#include "gsf/density.hpp"
#include "gsf/eval.hpp"
#include "oracles.hpp"

using namespace gsf;

namespace {

constexpr Complex kI{0.0, 1.0};

// Gaussian-smoothed two-dimensional Fourier inversion of the m = 2 rational
// function psi_(mu1, mu2, 0)(X). Smoothing leaves a density that is linear near
// h unchanged, and the m = 2 kernel is piecewise linear.
double inverted_kernel(const Eigen::Vector3d& x, double h1, double h2) {
  const double sigma = 0.03, step = 0.5, cutoff = 8.0 / sigma;
  const int half = static_cast<int>(cutoff / step);
  double acc = 0.0;
  for (int a = -half; a < half; ++a)
    for (int b = -half; b < half; ++b) {
      const double mu1 = (a + 0.5) * step, mu2 = (b + 0.25) * step;
      const Eigen::Vector3cd l(mu1, mu2, 0.0);
      const Complex psi = oracle::psi_m2(l, x);
      acc += (psi * std::exp(-kI * (mu1 * h1 + mu2 * h2))).real() *
             std::exp(-0.5 * sigma * sigma * (mu1 * mu1 + mu2 * mu2));
    }
  return acc * step * step / (4.0 * std::numbers::pi * std::numbers::pi);
}

double kernel(std::initializer_list<double> h, std::initializer_list<double> x, double m, Setting s) {
  return kernel_K(CartanPoint(h), CartanPoint(x), m, s).value;
}

}  // namespace

TEST_CASE("fiber domains") {
  const auto d = fiber_domain(CartanPoint{1.0, 1.0, 1.0}, CartanPoint{2.0, 1.0, 0.0});
  REQUIRE(d.dimension() == 1);
  REQUIRE(d.vertices.size() == 2);
  CHECK(d.vertices[0](0) == doctest::Approx(1.0));
  CHECK(d.vertices[1](0) == doctest::Approx(2.0));
  CHECK(d.xi(Eigen::VectorXd::Constant(1, 1.5)).isApprox(Eigen::Vector2d(1.5, 0.5)));

  const auto v = fiber_domain(CartanPoint{2.0, 1.0, 0.0}, CartanPoint{2.0, 1.0, 0.0});
  REQUIRE(v.vertices.size() == 2);
  CHECK(v.vertices[0](0) == doctest::Approx(2.0));
  CHECK(v.vertices[1](0) == doctest::Approx(2.0));
  CHECK(v.xi(v.vertices[0]).isApprox(Eigen::Vector2d(2.0, 1.0)));

  const auto s = fiber_domain(CartanPoint{1.5, 1.2, 1.3}, CartanPoint{2.0, 2.0, 0.0});
  CHECK(s.dimension() == 0);
  CHECK(s.full_eta(Eigen::VectorXd(0))(0) == doctest::Approx(1.5 + 1.2 - 2.0));

  CHECK_THROWS_AS(fiber_domain(CartanPoint{2.5, 0.5, 0.0}, CartanPoint{2.0, 1.0, 0.0}), std::domain_error);
}

TEST_CASE("kernel at n = 2 matches the rank-two formula") {
  for (Setting s : {Setting::trigonometric, Setting::rational})
    for (double m : {0.6, 2.0, 3.0})
      CHECK(kernel({0.3, -0.1}, {0.9, -0.7}, m, s) ==
            doctest::Approx(kernel_K2(CartanPoint{0.3, -0.1}, CartanPoint{0.9, -0.7}, m, s).value));
  CHECK(check::kernel_mass_n2(Eigen::Vector2d(1.0, -1.0), 2.0, Setting::rational) == doctest::Approx(1.0));
  CHECK(check::kernel_mass_n2(Eigen::Vector2d(0.4, -1.1), 0.7, Setting::rational) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("n = 3, m = 2 kernel against Fourier inversion") {
  const Eigen::Vector3d x(1.0, 0.0, -1.0);
  for (const Eigen::Vector2d h : {Eigen::Vector2d(0.5, -0.25), Eigen::Vector2d(-0.2, 0.6)}) {
    const double k = kernel({h(0), h(1), -h.sum()}, {1.0, 0.0, -1.0}, 2.0, Setting::rational);
    CHECK(k > 0.0);
    CHECK(k == doctest::Approx(inverted_kernel(x, h(0), h(1))).epsilon(1e-6));
  }
  CHECK(kernel({0.0, 0.0, 0.0}, {1.0, 0.0, -1.0}, 2.0, Setting::rational) > 0.0);
}

TEST_CASE("n = 3, m = 1 kernel against Haar diagonals of real symmetric matrices") {
  const Eigen::Vector3d x(1.0, 0.0, -1.0);
  const double c1 = 0.5, c2 = -0.25, w = 0.1;
  std::mt19937_64 rng(21);
  const int count = 400000;
  int hits = 0;
  for (int i = 0; i < count; ++i) {
    const Eigen::VectorXd h = oracle::haar_diagonal(x, 1, rng);
    hits += std::abs(h(0) - c1) < w / 2 && std::abs(h(1) - c2) < w / 2;
  }
  const double p = double(hits) / count;
  const double box = tanh_sinh_integrate<double>(
                         [&](double h1) {
                           return tanh_sinh_integrate<double>(
                                      [&](double h2) {
                                        return kernel({h1, h2, -h1 - h2}, {1.0, 0.0, -1.0}, 1.0,
                                                      Setting::rational);
                                      },
                                      c2 - w / 2, c2 + w / 2, 1e-9, 5)
                               .value;
                         },
                         c1 - w / 2, c1 + w / 2, 1e-9, 5)
                         .value;
  CHECK(std::abs(p - box) < 3 * std::sqrt(p * (1 - p) / count));
}

TEST_CASE("kernel masses at n = 3") {
  const Eigen::Vector3d x(0.8, 0.1, -0.6);
  CHECK(check::kernel_mass_n3(x, 2.0, Setting::rational, 1e-8, 6) == doctest::Approx(1.0).epsilon(1e-7));
  // the trigonometric kernel represents phi, so its mass is phi_0
  const double phi0 = eval_phi(SpectralParam{0.0, 0.0, 0.0}, CartanPoint(Eigen::VectorXd(x)), 2.0).value.real();
  CHECK(check::kernel_mass_n3(x, 2.0, Setting::trigonometric, 1e-8, 6) == doctest::Approx(phi0).epsilon(1e-7));
}

TEST_CASE("kernel support") {
  CHECK(kernel({1.0 + 1e-6, 0.0, -1.0 - 1e-6}, {1.0, 0.0, -1.0}, 1.0, Setting::rational) == 0.0);
  const auto out = kernel_K(CartanPoint{1.2, -0.1, -1.1}, CartanPoint{1.0, 0.0, -1.0}, 1.0, Setting::rational);
  CHECK(out.status == KernelStatus::outside);
  CHECK(out.value == 0.0);
  CHECK_THROWS(kernel_K(CartanPoint{1.0, 1.0, 1.0}, CartanPoint{1.0, 1.0, 1.0}, 1.0, Setting::rational));
}

TEST_CASE("rank-two sampler is a Beta mixture") {
  const double m = 3.0;
  const Eigen::MatrixXd h = sample_measure(CartanPoint{1.0, -1.0}, m, Setting::rational, 100000, 5);
  // h_1 = gamma_1 x_2 + gamma_2 x_1, gamma_1 ~ Beta(m/2, m/2): mean 0, variance 4 / (4 (m + 1))
  const double mean = h.col(0).mean();
  const double var = (h.col(0).array() - mean).square().mean();
  const double want_var = 1.0 / (m + 1.0);
  CHECK(std::abs(mean) < 3 * std::sqrt(want_var / h.rows()));
  CHECK(var == doctest::Approx(want_var).epsilon(0.02));
  CHECK((h.rowwise().sum().array().abs() < 1e-14).all());
}

TEST_CASE("sampler properties") {
  const Eigen::MatrixXd dirac = sample_measure(CartanPoint{0.3, 0.3, 0.3}, 1.0, Setting::trigonometric, 50, 1);
  for (Eigen::Index i = 0; i < dirac.rows(); ++i) CHECK(dirac.row(i).isApprox(Eigen::RowVector3d(0.3, 0.3, 0.3)));

  const Eigen::MatrixXd a = sample_measure(CartanPoint{0.9, -0.1, -0.4}, 1.5, Setting::rational, 20, 77);
  const Eigen::MatrixXd b = sample_measure(CartanPoint{0.9, -0.1, -0.4}, 1.5, Setting::rational, 10, 77);
  CHECK(a.topRows(10) == b);

  const CartanPoint X{0.9, -0.1, -0.4};
  const Eigen::MatrixXd h = sample_measure(X, 1.0, Setting::rational, 100000, 3);
  const Eigen::Vector3cd l(1.3, -0.2, 0.6);
  Complex s{};
  std::vector<Complex> v(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) s += v[i] = std::exp(kI * l.dot(h.row(i).transpose().cast<Complex>()));
  const Complex mean = s / double(h.rows());
  double ss = 0.0;
  for (const auto& z : v) ss += std::norm(z - mean);
  const double sigma = std::sqrt(ss / (double(h.rows()) * (h.rows() - 1)));
  CHECK(std::abs(mean - eval_psi(SpectralParam(Eigen::VectorXcd(l)), X, 1.0).value) < 3 * sigma);
}

TEST_CASE("dual Abel transform") {
  const CartanPoint X{1.0, -1.0};
  const auto one = dual_abel([](const Eigen::VectorXd&) { return Complex(1.0); }, X, 2.0, Setting::rational, 1000, 1);
  CHECK(std::abs(one.value - 1.0) < 1e-15);
  const auto sq = dual_abel([](const Eigen::VectorXd& h) { return Complex(h.squaredNorm()); }, X, 2.0,
                            Setting::rational, 100000, 2);
  CHECK(std::abs(sq.value.real() - 2.0 / 3.0) < 3 * sq.std_error);

  const CartanPoint Y{0.7, 0.1, -0.5};
  const Eigen::Vector3d l(0.8, -1.1, 0.4);
  const auto wave = dual_abel([&](const Eigen::VectorXd& h) { return std::exp(kI * l.dot(h)); }, Y, 1.0,
                              Setting::trigonometric, 100000, 3);
  const Complex p = eval_phi(SpectralParam(Eigen::VectorXcd(l.cast<Complex>())), Y, 1.0).value;
  CHECK(std::abs(wave.value - p) < 3 * wave.std_error);
}
