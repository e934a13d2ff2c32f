// gsf: evaluate generalized spherical functions, sample the representing
// measures, evaluate the Laplace kernel and run the check suites.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "checks.hpp"
#include "gsf/density.hpp"
#include "gsf/eval.hpp"

namespace {

using gsf::Complex;
using json = nlohmann::json;

struct RunConfig {
  std::string command;
  int n = 0;
  double m = 1.0;
  std::string setting = "trig";
  std::vector<double> x;
  std::vector<double> h;
  std::vector<double> lambda_re;
  std::vector<double> lambda_im;
  std::string method = "quad";
  int nodes = 0;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = 1e-10;
  std::string format = "json";
  std::vector<std::string> grid;
  std::string suite;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a over the canonical text of the configuration.
std::uint64_t config_hash(const RunConfig& c) {
  std::ostringstream s;
  s.precision(17);
  s << c.command << '|' << c.m << '|' << c.setting << '|' << c.method << '|' << c.samples << '|' << c.suite;
  for (double v : c.x) s << ',' << v;
  s << '|';
  for (double v : c.lambda_re) s << ',' << v;
  s << '|';
  for (double v : c.lambda_im) s << ',' << v;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s.str()) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

void resolve_seed(RunConfig& c) {
  if (c.seed_given) return;
  c.seed = config_hash(c);
  std::cerr << "seed " << c.seed << '\n';
}

gsf::Setting parse_setting(const std::string& s) {
  return s == "dunkl" ? gsf::Setting::rational : gsf::Setting::trigonometric;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Point {
  Eigen::VectorXd x;
  Eigen::VectorXcd lambda;
  double m;
};

Point base_point(const RunConfig& c) {
  const int n = c.n > 0 ? c.n : static_cast<int>(c.x.size());
  if (n < 1) throw UsageError("--x is required");
  if (static_cast<int>(c.x.size()) != n) throw UsageError("--x needs n entries");
  if (!c.lambda_re.empty() && static_cast<int>(c.lambda_re.size()) != n)
    throw UsageError("--lambda-re needs n entries");
  if (!c.lambda_im.empty() && static_cast<int>(c.lambda_im.size()) != n)
    throw UsageError("--lambda-im needs n entries");
  if (!(c.m > 0.0)) throw UsageError("--m must be positive");
  Point p{Eigen::Map<const Eigen::VectorXd>(c.x.data(), n), Eigen::VectorXcd::Zero(n), c.m};
  for (int k = 0; k < n; ++k)
    p.lambda(k) = Complex(c.lambda_re.empty() ? 0.0 : c.lambda_re[k], c.lambda_im.empty() ? 0.0 : c.lambda_im[k]);
  return p;
}

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

GridAxis parse_grid(const std::vector<std::string>& g, int n) {
  if (g.empty()) return {};
  if (g.size() != 4) throw UsageError("--grid takes AXIS LO HI STEPS");
  GridAxis axis{g[0], {}};
  double lo = 0.0, hi = 0.0;
  long steps = 0;
  try {
    lo = std::stod(g[1]);
    hi = std::stod(g[2]);
    steps = std::stol(g[3]);
  } catch (const std::exception&) {
    throw UsageError("--grid bounds and steps must be numbers");
  }
  if (steps < 1) throw UsageError("--grid steps must be at least 1");
  auto index_of = [&](const std::string& prefix) {
    if (axis.name.rfind(prefix, 0) != 0) return -1;
    try {
      const int k = std::stoi(axis.name.substr(prefix.size()));
      return k >= 1 && k <= n ? k - 1 : -2;
    } catch (const std::exception&) {
      return -2;
    }
  };
  if (axis.name != "m" && index_of("x") < 0 && index_of("lambda") < 0)
    throw UsageError("--grid axis must be m, x<k> or lambda<k>");
  for (long i = 0; i < steps; ++i)
    axis.values.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  return axis;
}

void apply_axis(Point& p, const std::string& axis, double v) {
  if (axis == "m") {
    p.m = v;
  } else if (axis.rfind("lambda", 0) == 0) {
    const int k = std::stoi(axis.substr(6)) - 1;
    p.lambda(k) = Complex(v, p.lambda(k).imag());
  } else {
    p.x(std::stoi(axis.substr(1)) - 1) = v;
  }
}

int cmd_eval(RunConfig& c) {
  gsf::EvalOptions o;
  if (c.method == "mc") {
    resolve_seed(c);
    o.method = gsf::Method::mc;
    o.seed = c.seed;
  }
  o.samples = c.samples;
  o.tol = c.tol;
  if (c.nodes > 0) {
    o.nodes = c.nodes;
    o.adaptive = false;
  }
  const Point base = base_point(c);
  const GridAxis axis = parse_grid(c.grid, static_cast<int>(base.x.size()));
  std::vector<Point> points;
  if (axis.values.empty()) points.push_back(base);
  for (double v : axis.values) {
    Point p = base;
    apply_axis(p, axis.name, v);
    if (!(p.m > 0.0)) throw UsageError("--m must be positive");
    points.push_back(p);
  }
  if (c.format == "csv") {
    if (!axis.name.empty()) std::cout << axis.name << ',';
    std::cout << "re,im,err,method,n_used,converged\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    const gsf::SpectralParam lam(p.lambda);
    const gsf::CartanPoint X(p.x);
    gsf::EvalResult r;
    if (c.command == "eval-trig-phi") r = gsf::eval_phi(lam, X, p.m, o);
    else if (c.command == "eval-trig-chi") r = gsf::eval_chi(lam, X, p.m, o);
    else r = gsf::eval_psi(lam, X, p.m, o);
    if (c.format == "csv") {
      if (!axis.name.empty()) std::cout << fmt(axis.values[i]) << ',';
      std::cout << fmt(r.value.real()) << ',' << fmt(r.value.imag()) << ',' << fmt(r.error_estimate) << ','
                << gsf::to_string(r.method) << ',' << r.samples_or_nodes << ',' << (r.converged ? 1 : 0)
                << '\n';
    } else {
      json j{{"re", r.value.real()},
             {"im", r.value.imag()},
             {"err", r.error_estimate},
             {"method", gsf::to_string(r.method)},
             {"n_used", r.samples_or_nodes},
             {"converged", r.converged}};
      if (!axis.name.empty()) j[axis.name] = axis.values[i];
      std::cout << j.dump() << '\n';
    }
  }
  return 0;
}

int cmd_sample(RunConfig& c) {
  resolve_seed(c);
  const Point p = base_point(c);
  const Eigen::MatrixXd h =
      gsf::sample_measure(gsf::CartanPoint(p.x), p.m, parse_setting(c.setting), c.samples, c.seed);
  const Eigen::Index n = h.cols();
  if (c.format == "csv") {
    for (Eigen::Index k = 0; k < n; ++k) std::cout << (k ? "," : "") << 'h' << k + 1;
    std::cout << '\n';
  }
  std::string line;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (c.format == "csv") {
      line.clear();
      for (Eigen::Index k = 0; k < n; ++k) (line += k ? "," : "") += fmt(h(i, k));
      std::cout << line << '\n';
    } else {
      json row = json::array();
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(h(i, k));
      std::cout << json{{"h", row}}.dump() << '\n';
    }
  }
  return 0;
}

int cmd_kernel(RunConfig& c) {
  const Point p = base_point(c);
  if (c.h.size() != static_cast<std::size_t>(p.x.size())) throw UsageError("--at needs n entries");
  const auto k = gsf::kernel_K(gsf::CartanPoint(Eigen::Map<const Eigen::VectorXd>(c.h.data(), c.h.size())),
                               gsf::CartanPoint(p.x), p.m, parse_setting(c.setting));
  if (c.format == "csv")
    std::cout << "value,status\n" << fmt(k.value) << ',' << gsf::to_string(k.status) << '\n';
  else
    std::cout << json{{"value", k.value}, {"status", gsf::to_string(k.status)}}.dump() << '\n';
  return 0;
}

int cmd_check(RunConfig& c) {
  resolve_seed(c);
  gsf::check::CheckOptions o;
  o.seed = c.seed;
  std::vector<std::string> names;
  if (c.suite == "all")
    for (const auto& s : gsf::check::suites()) names.push_back(s.name);
  else
    names.push_back(c.suite);
  bool ok = true;
  for (const auto& name : names) {
    gsf::check::SuiteReport r;
    try {
      r = gsf::check::run_suite(name, o);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ok = ok && r.ok;
    std::cout << json{{"suite", r.suite},
                      {"cases", r.cases},
                      {"passed", r.passed},
                      {"max_error", r.max_error},
                      {"ok", r.ok},
                      {"note", r.note}}
                     .dump()
              << '\n';
  }
  return ok ? 0 : 1;
}

void add_point_options(CLI::App* app, RunConfig& c) {
  app->add_option("--n", c.n, "Rank plus one; defaults to the length of --x")->check(CLI::PositiveNumber);
  app->add_option("--m", c.m, "Multiplicity, m > 0");
  app->add_option("--x", c.x, "Entries of X")->expected(1, -1);
  app->add_option("--lambda-re", c.lambda_re, "Real parts of lambda")->expected(1, -1);
  app->add_option("--lambda-im", c.lambda_im, "Imaginary parts of lambda")->expected(1, -1);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_seed_option(CLI::App* app, RunConfig& c) {
  app->add_option_function<std::uint64_t>(
      "--seed", [&c](std::uint64_t s) { c.seed = s, c.seed_given = true; },
      "Random seed; derived from the configuration when omitted");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Generalized spherical functions of type A"};
  app.require_subcommand(1);

  for (const char* name : {"eval-trig-phi", "eval-trig-chi", "eval-dunkl"}) {
    auto* sub = app.add_subcommand(name, name == std::string("eval-dunkl") ? "Rational spherical function psi"
                                         : name == std::string("eval-trig-phi")
                                             ? "Heckman-Opdam spherical function phi"
                                             : "Shifted spherical function chi");
    add_point_options(sub, c);
    sub->add_option("--method", c.method, "quad or mc")->check(CLI::IsMember({"quad", "mc"}));
    sub->add_option("--nodes", c.nodes, "Fixed nodes per dimension; 0 is adaptive")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::Range(2.0, 1e12));
    sub->add_option("--tol", c.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--setting", c.setting, "Ignored for eval commands")->check(CLI::IsMember({"trig", "dunkl"}));
    sub->add_option("--grid", c.grid, "AXIS LO HI STEPS, AXIS in m, x<k>, lambda<k>")->expected(4);
    add_seed_option(sub, c);
    sub->callback([&c, name] { c.command = name; });
  }

  auto* sample = app.add_subcommand("sample", "Draw points H from the representing measure of X");
  add_point_options(sample, c);
  sample->add_option("--setting", c.setting, "trig or dunkl")->check(CLI::IsMember({"trig", "dunkl"}));
  sample->add_option("--samples", c.samples, "Number of rows")->check(CLI::PositiveNumber);
  add_seed_option(sample, c);
  sample->callback([&c] { c.command = "sample"; });

  auto* kernel = app.add_subcommand("kernel", "Laplace kernel K(H, X), n <= 4");
  add_point_options(kernel, c);
  kernel->add_option("--at", c.h, "Entries of H")->expected(1, -1)->required();
  kernel->add_option("--setting", c.setting, "trig or dunkl")->check(CLI::IsMember({"trig", "dunkl"}));
  kernel->callback([&c] { c.command = "kernel"; });

  auto* check = app.add_subcommand("check", "Run a check suite");
  std::string suite_help = "Suite name or all:";
  for (const auto& s : gsf::check::suites()) suite_help += std::string(" ") + s.name;
  check->add_option("suite", c.suite, suite_help)->required();
  add_seed_option(check, c);
  check->callback([&c] { c.command = "check"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c.command == "sample") return cmd_sample(c);
    if (c.command == "kernel") return cmd_kernel(c);
    if (c.command == "check") return cmd_check(c);
    return cmd_eval(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
