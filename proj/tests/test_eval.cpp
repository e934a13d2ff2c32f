#include <doctest.h>

#include <cmath>
#include <random>

#include "gsf/eval.hpp"
#include "gsf/quadrature.hpp"
#include "oracles.hpp"

using namespace gsf;

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phi(std::initializer_list<Complex> l, std::initializer_list<double> x, double m, const EvalOptions& o = {}) {
  return eval_phi(SpectralParam(l), CartanPoint(x), m, o).value;
}

Complex psi(std::initializer_list<Complex> l, std::initializer_list<double> x, double m, const EvalOptions& o = {}) {
  return eval_psi(SpectralParam(l), CartanPoint(x), m, o).value;
}

// Mean and standard error of z over draws.
template <class F>
std::pair<Complex, double> mean_of(int count, F&& z) {
  std::vector<Complex> v(count);
  Complex s{};
  for (int i = 0; i < count; ++i) s += v[i] = z(i);
  const Complex mean = s / double(count);
  double ss = 0.0;
  for (const auto& c : v) ss += std::norm(c - mean);
  return {mean, std::sqrt(ss / (double(count) * (count - 1)))};
}

}  // namespace

TEST_CASE("normalizations") {
  for (double m : {0.5, 1.0, 3.0}) {
    CHECK(std::abs(eval_chi(SpectralParam{0.0, 0.0, 0.0}, CartanPoint{1.0, 0.3, -0.8}, m).value - 1.0) < 1e-12);
    CHECK(std::abs(psi({0.0, 0.0, 0.0}, {1.0, 0.3, -0.8}, m) - 1.0) < 1e-13);
    CHECK(std::abs(phi({0.4, -1.0, 2.0}, {0.0, 0.0, 0.0}, m) - 1.0) < 1e-13);
    // phi_{-i rho} = chi_0 = 1
    const Eigen::VectorXcd l = -kI * rho_vector(3, m).cast<Complex>();
    CHECK(std::abs(eval_phi(SpectralParam(l), CartanPoint{0.9, -0.2, -0.4}, m).value - 1.0) < 1e-12);
  }
}

TEST_CASE("rank one is a plane wave") {
  const Complex want = std::exp(kI * Complex(0.7, 0.2) * 1.3);
  CHECK(std::abs(phi({Complex(0.7, 0.2)}, {1.3}, 1.0) - want) < 1e-15);
  CHECK(std::abs(psi({Complex(0.7, 0.2)}, {1.3}, 1.0) - want) < 1e-15);
  CHECK(std::abs(eval_chi(SpectralParam{Complex(0.7, 0.2)}, CartanPoint{1.3}, 2.0).value - want) < 1e-15);
}

TEST_CASE("rank two at m = 2") {
  const Complex p = phi({1.0, -1.0}, {1.0, -1.0}, 2.0);
  CHECK(p.real() == doctest::Approx(std::sin(2.0) / std::sinh(2.0)).epsilon(1e-12));
  CHECK(p.real() == doctest::Approx(0.250713).epsilon(1e-6));
  CHECK(std::abs(p.imag()) < 1e-12);
  const Complex q = psi({1.0, -1.0}, {1.0, -1.0}, 2.0);
  CHECK(q.real() == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-12));
  CHECK(q.real() == doctest::Approx(0.454649).epsilon(1e-6));
}

TEST_CASE("chi at rank two is a Dirichlet mean") {
  // h_1 = log(gamma e^{-2} + (1 - gamma) e^{2}) / 2 with gamma uniform; lambda(H) = 2 h_1
  const auto ref = tanh_sinh_integrate<Complex>(
      [](double g) { return std::exp(kI * std::log(g * std::exp(-2.0) + (1 - g) * std::exp(2.0))); }, 0.0, 1.0,
      1e-13);
  const Complex quad = eval_chi(SpectralParam{1.0, -1.0}, CartanPoint{1.0, -1.0}, 2.0).value;
  CHECK(std::abs(quad - ref.value) < 1e-11);
  EvalOptions mc;
  mc.method = Method::mc;
  mc.samples = 100000;
  const auto r = eval_chi(SpectralParam{1.0, -1.0}, CartanPoint{1.0, -1.0}, 2.0, mc);
  CHECK(std::abs(r.value - quad) < 3 * r.error_estimate);
  CHECK(r.method == Method::mc);
  CHECK(r.samples_or_nodes == 100000);
  CHECK(eval_chi(SpectralParam{1.0, -1.0}, CartanPoint{1.0, -1.0}, 2.0, mc).value == r.value);
}

TEST_CASE("m = 2 determinant formulas, n = 3 and 4") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {3, 4}) {
    for (int c = 0; c < 3; ++c) {
      Eigen::VectorXd x(n);
      Eigen::VectorXcd l(n);
      for (int i = 0; i < n; ++i) x(i) = u(rng), l(i) = Complex(2 * u(rng), 0.3 * u(rng));
      const Complex p = eval_phi(SpectralParam(l), CartanPoint(x), 2.0).value;
      const Complex q = eval_psi(SpectralParam(l), CartanPoint(x), 2.0).value;
      CHECK(std::abs(p - oracle::phi_m2(l, x)) < 1e-9 * std::max(1.0, std::abs(p)));
      CHECK(std::abs(q - oracle::psi_m2(l, x)) < 1e-9 * std::max(1.0, std::abs(q)));
    }
  }
}

TEST_CASE("m = 1: Haar averages over SO(3)") {
  const Eigen::Vector3d x(0.9, 0.1, -0.6);
  const Eigen::Vector3cd l(Complex(1.2, 0), Complex(-0.5, 0), Complex(0.4, 0));
  const Eigen::VectorXd rho = rho_vector(3, 1.0);
  std::mt19937_64 rng(9);
  const auto [trig, s1] = mean_of(40000, [&](int) {
    const Eigen::VectorXd h = oracle::iwasawa_sample(x, 1, rng);
    return std::exp(kI * l.dot(h.cast<Complex>()) - rho.dot(h));
  });
  const Complex p = eval_phi(SpectralParam(Eigen::VectorXcd(l)), CartanPoint(Eigen::VectorXd(x)), 1.0).value;
  CHECK(std::abs(p - trig) < 3 * s1);
  const auto [rat, s2] = mean_of(40000, [&](int) {
    const Eigen::VectorXd h = oracle::haar_diagonal(x, 1, rng);
    return std::exp(kI * l.dot(h.cast<Complex>()));
  });
  const Complex q = eval_psi(SpectralParam(Eigen::VectorXcd(l)), CartanPoint(Eigen::VectorXd(x)), 1.0).value;
  CHECK(std::abs(q - rat) < 3 * s2);
}

TEST_CASE("X = cI gives a plane wave") {
  const Complex got = phi({1.0, Complex(0.3, 0.1), -2.0}, {0.4, 0.4, 0.4}, 1.5);
  CHECK(std::abs(got - std::exp(kI * 0.4 * Complex(-0.7, 0.1))) < 1e-14);
}

TEST_CASE("walls: degenerate X is the limit of regular ones") {
  const Complex wall = phi({1.1, -0.3, 0.5}, {2.0, 2.0, 0.0}, 1.0);
  double prev = INFINITY;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const Complex near = eval_phi(SpectralParam{1.1, -0.3, 0.5}, CartanPoint{2 + eps, 2 - eps, 0.0}, 1.0).value;
    const double d = std::abs(near - wall);
    CHECK(d < 10 * eps);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("rational homogeneity") {
  const double c = 1.7;
  const Complex a = psi({c * 0.8, c * -0.2, c * 1.4}, {0.5, -0.1, -0.9}, 1.3);
  const Complex b = psi({0.8, -0.2, 1.4}, {c * 0.5, c * -0.1, c * -0.9}, 1.3);
  CHECK(std::abs(a - b) < 1e-11);
}

TEST_CASE("simplex and box routes agree") {
  EvalOptions simplex;
  simplex.route = Route::simplex;
  simplex.tol = 1e-11;
  const SpectralParam l{0.9, -0.4, 0.2};
  const CartanPoint X{0.8, 0.1, -0.7};
  for (double m : {1.0, 3.0}) {
    CHECK(std::abs(eval_phi(l, X, m, simplex).value - eval_phi(l, X, m).value) < 1e-9);
    CHECK(std::abs(eval_psi(l, X, m, simplex).value - eval_psi(l, X, m).value) < 1e-9);
    CHECK(std::abs(eval_chi(l, X, m, simplex).value - eval_chi(l, X, m).value) < 1e-9);
  }
}

TEST_CASE("fixed rules") {
  EvalOptions o;
  o.nodes = 12;
  o.adaptive = false;
  const auto r = eval_phi(SpectralParam{0.9, -0.4, 0.2}, CartanPoint{0.8, 0.1, -0.7}, 1.0, o);
  CHECK(r.samples_or_nodes == 12);
  CHECK(r.error_estimate < 1e-6);
  const auto a = eval_phi(SpectralParam{0.9, -0.4, 0.2}, CartanPoint{0.8, 0.1, -0.7}, 1.0);
  CHECK(a.converged);
  CHECK(a.error_estimate < 1e-10);
}

TEST_CASE("rational limit probe") {
  const auto zero = rational_limit_probe(SpectralParam{0.0, 0.0}, CartanPoint{1.0, -1.0}, 2.0, {0.1, 0.01});
  // psi_0 = 1 while phi_0(e^{eps X}) = 2 eps / sinh(2 eps) at m = 2
  for (int i = 0; i < 2; ++i) {
    const double e = zero[i].epsilon;
    CHECK(zero[i].deviation == doctest::Approx(1.0 - 2 * e / std::sinh(2 * e)).epsilon(1e-8));
  }
  const auto p = rational_limit_probe(SpectralParam{1.0, -1.0}, CartanPoint{1.0, -1.0}, 2.0, {1e-1, 1e-2, 1e-3});
  CHECK(p[0].deviation > 100 * p[2].deviation);
  // at m = 2 both sides are explicit
  const double eps = 0.1;
  const double want = std::abs(std::sin(2.0) / 2.0 - eps * std::sin(2.0) / std::sinh(2 * eps));
  CHECK(p[0].deviation == doctest::Approx(want).epsilon(1e-8));
  CHECK_THROWS_AS(rational_limit_probe(SpectralParam{1.0, -1.0}, CartanPoint{1.0, -1.0}, 2.0, {1e-2, 1e-1}),
                  std::invalid_argument);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(eval_phi(SpectralParam{1.0, 2.0}, CartanPoint{1.0, 0.0, -1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS(eval_psi(SpectralParam{1.0, 2.0}, CartanPoint{1.0, 0.0}, 0.0));
  CHECK_THROWS(eval_psi(SpectralParam{1.0, 2.0}, CartanPoint{1.0, 0.0}, -1.0));
}
