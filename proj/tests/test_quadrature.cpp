#include <doctest.h>

#include <cmath>

#include "gsf/quadrature.hpp"

using namespace gsf;

TEST_CASE("Gauss-Legendre with two and three nodes") {
  const auto two = jacobi_rule(-1.0, 1.0, 0.0, 0.0, 2);
  CHECK(two.nodes.cwiseAbs().minCoeff() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(two.weights(0) == doctest::Approx(1.0));
  CHECK(two.weights(1) == doctest::Approx(1.0));
  const auto three = jacobi_rule(-1.0, 1.0, 0.0, 0.0, 3);
  CHECK((three.weights.array() * three.nodes.array().pow(4)).sum() == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("Jacobi weights follow the (b - t)^alpha (t - a)^beta convention") {
  const auto one = jacobi_rule(0.0, 1.0, 1.0, 1.0, 1);
  CHECK(one.nodes(0) == doctest::Approx(0.5));
  CHECK(one.weights(0) == doctest::Approx(1.0 / 6.0));
  // int_0^2 t (2 - t)^3 (t)^0.5 dt against Beta functions
  const double alpha = 3.0, beta = 0.5;
  const auto r = jacobi_rule(0.0, 2.0, alpha, beta, 6);
  const double got = (r.weights.array() * r.nodes.array()).sum();
  const double want = std::pow(2.0, alpha + beta + 2) * std::tgamma(alpha + 1) * std::tgamma(beta + 2) /
                      std::tgamma(alpha + beta + 3);
  CHECK(got == doctest::Approx(want).epsilon(1e-13));
  CHECK_THROWS_AS(jacobi_rule(0.0, 1.0, -1.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("graded rule resolves a nearby singularity") {
  // int_0^1 t^-1/2 (t + g)^-1/2 dt = 2 asinh(1/sqrt g)
  for (double g : {1e-3, 1e-6, 1e-9}) {
    const double want = 2.0 * std::asinh(1.0 / std::sqrt(g));
    const auto r = graded_jacobi_rule(0.0, 1.0, 0.0, -0.5, INFINITY, g, 24);
    const double got = (r.weights.array() * (r.nodes.array() + g).rsqrt()).sum();
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
    const auto plain = jacobi_rule(0.0, 1.0, 0.0, -0.5, r.size());
    const double rough = (plain.weights.array() * (plain.nodes.array() + g).rsqrt()).sum();
    CHECK(std::abs(rough - want) > 100 * std::abs(got - want));
  }
  // int_0^1 (1 + g - t)^-1/2 dt = 2 (sqrt(1 + g) - sqrt g)
  const double g = 1e-8;
  const auto r = graded_jacobi_rule(0.0, 1.0, 0.0, 0.0, g, INFINITY, 24);
  const double got = (r.weights.array() * (1.0 + g - r.nodes.array()).rsqrt()).sum();
  CHECK(got == doctest::Approx(2.0 * (std::sqrt(1.0 + g) - std::sqrt(g))).epsilon(1e-10));
  // far singularities leave the plain rule in place
  CHECK(graded_jacobi_rule(0.0, 1.0, 0.2, 0.3, 0.9, 0.8, 10).size() == 10);
}

TEST_CASE("beta and stick-breaking rules are probability rules") {
  const auto b = beta_rule(0.5, 2.0, 8);
  CHECK(b.weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((b.weights.array() * b.nodes.array()).sum() == doctest::Approx(0.5 / 2.5).epsilon(1e-14));

  const Eigen::Vector3d c(0.5, 1.5, 1.0);
  const auto rules = stick_breaking_rules(c, 6);
  REQUIRE(rules.size() == 2);
  // E gamma_2 = E (1 - t_1) t_2 = c_2 / sum c
  const double e1 = 1.0 - (rules[0].weights.array() * rules[0].nodes.array()).sum();
  const double e2 = (rules[1].weights.array() * rules[1].nodes.array()).sum();
  CHECK(e1 * e2 == doctest::Approx(1.5 / 3.0).epsilon(1e-13));
}

TEST_CASE("Dirichlet sampler moments") {
  const DirichletSampler flat(Eigen::Vector2d(1.0, 1.0), 42);
  const DirichletSampler half(Eigen::Vector2d(0.25, 0.25), 43);
  const int count = 100000;
  double s = 0, ss = 0, t = 0;
  for (int i = 0; i < count; ++i) {
    const double g = flat.draw(i)[0];
    s += g, ss += g * g;
    t += half.draw(i)[0];
  }
  const double mean = s / count;
  const double sigma = std::sqrt((ss / count - mean * mean) / count);
  CHECK(std::abs(mean - 0.5) < 3 * sigma);
  CHECK(std::abs(t / count - 0.5) < 3 * std::sqrt(0.25 / 1.5 / count));
  // draws depend on (seed, index) only
  CHECK(flat.draw(17).values() == flat.draw(17).values());
  const auto batch = dirichlet_sample(flat, 3, 16);
  CHECK(batch[1].values() == flat.draw(17).values());
  CHECK(std::abs(batch[0].values().sum() - 1.0) < 1e-15);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const auto f = [](double t) { return 1.0 / std::sqrt(t * (1.0 - t)); };
  const auto r = tanh_sinh_integrate<double>(f, 0.0, 0.5, 1e-12);
  CHECK(r.converged);
  CHECK(2.0 * r.value == doctest::Approx(std::numbers::pi).epsilon(1e-13));
  // same singularity at the upper end: node rounding near 1 limits accuracy
  const auto u = tanh_sinh_integrate<double>(f, 0.0, 1.0, 1e-12);
  CHECK(u.value == doctest::Approx(std::numbers::pi).epsilon(1e-7));
  const auto l = tanh_sinh_integrate<double>([](double t) { return std::log(t); }, 0.0, 1.0, 1e-12);
  CHECK(l.value == doctest::Approx(-1.0).epsilon(1e-11));
}
