// Named-experiment runner: reproduces the study's sweeps as CSV tables and
// optional log-log SVG plots.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grfem/driver.hpp"

namespace {

using namespace grfem;

std::string fmt(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct Config {
  std::string experiment;
  Method method = Method::Robust;
  ElementPair pair = ElementPair::Q2_DGP1;
  std::vector<int> refine;
  std::vector<double> mu_list;
  std::vector<double> lambda_list;
  std::string out_path = "out.csv";
  bool plot = false;
  unsigned seed = 0;
};

std::vector<double> parse_list(const std::string& s, bool allow_inf,
                               const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "inf") {
      if (!allow_inf) throw CLI::ValidationError(std::string(what) + ": 'inf' not allowed here");
      out.push_back(kLambdaInfinity);
      continue;
    }
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size() || !(v > 0))
      throw CLI::ValidationError(std::string(what) + ": bad value '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

std::vector<int> parse_refine(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int r = std::stoi(tok);
    if (r < 1 || r > 8) throw CLI::ValidationError("--refine: exponent out of range [1,8]");
    out.push_back(r);
  }
  if (out.empty()) throw CLI::ValidationError("--refine: empty list");
  return out;
}

void apply_defaults(Config& cfg) {
  if (cfg.experiment == "ex1_incompressible") {
    if (cfg.refine.empty()) cfg.refine = {3};
    if (cfg.mu_list.empty()) cfg.mu_list = {1.0};
    if (cfg.lambda_list.empty()) cfg.lambda_list = {kLambdaInfinity};
  } else if (cfg.experiment == "ex2_gradient_poly" ||
             cfg.experiment == "ex3_gradient_cubic") {
    if (cfg.refine.empty()) cfg.refine = {3};
    if (cfg.mu_list.empty()) cfg.mu_list = {1e-5};
    if (cfg.lambda_list.empty())
      cfg.lambda_list = {1e0, 1e1, 1e2, 1e3, 1e4, 1e5};
  } else if (cfg.experiment == "ex4_nearly_incompressible") {
    if (cfg.refine.empty()) cfg.refine = {3};
    if (cfg.mu_list.empty()) cfg.mu_list = {1e-5};
    if (cfg.lambda_list.empty()) cfg.lambda_list = {1e2, 1e4, 1e6, 1e8};
  } else {  // thermo
    if (cfg.refine.empty()) cfg.refine = {3};
  }
}

void validate(const Config& cfg) {
  if (cfg.method == Method::Robust && cfg.pair != ElementPair::Q2_DGP1)
    throw CLI::ValidationError(
        "--method robust requires --elements q2_dgp1 (the reconstruction "
        "needs a discontinuous pressure space)");
  const bool has_inf = std::any_of(
      cfg.lambda_list.begin(), cfg.lambda_list.end(),
      [](double l) { return std::isinf(l); });
  if (has_inf && cfg.experiment != "ex1_incompressible")
    throw CLI::ValidationError("--lambda inf is only valid for ex1_incompressible");
  if (cfg.experiment == "thermo" &&
      (!cfg.mu_list.empty() || !cfg.lambda_list.empty()))
    throw CLI::ValidationError("thermo fixes mu and lambda; --mu/--lambda not accepted");
}

ProblemSpec make_problem(const Config& cfg, double mu, double lambda,
                         const Mesh& mesh) {
  if (cfg.experiment == "ex1_incompressible") {
    ProblemSpec p = example_incompressible(mu);
    p.lambda = lambda;
    return p;
  }
  if (cfg.experiment == "ex2_gradient_poly")
    return example_gradient_poly(mu, lambda);
  if (cfg.experiment == "ex3_gradient_cubic")
    return example_gradient_cubic(mu, lambda);
  if (cfg.experiment == "ex4_nearly_incompressible")
    return example_nearly_incompressible(mu, lambda);
  return thermo_pipeline(ThermoParams{}, mesh);
}

struct Row {
  double h, mu, lambda;
  ErrorReport rep;
};

void write_csv(const Config& cfg, const std::vector<Row>& rows) {
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + cfg.out_path);
  const char* method = cfg.method == Method::Robust ? "robust" : "naive";
  const char* elements =
      cfg.pair == ElementPair::Q2_DGP1 ? "q2_dgp1" : "q2_q1";
  out << "experiment,method,elements,h,mu,lambda,dofs,err_h1,err_h1_semi,"
         "err_l2,norm_u_h1,div_residual,constitutive_residual,solver_residual\n";
  for (const Row& r : rows)
    out << cfg.experiment << ',' << method << ',' << elements << ','
        << fmt(r.h) << ',' << fmt(r.mu) << ',' << fmt(r.lambda) << ','
        << r.rep.dofs << ',' << fmt(r.rep.err_h1) << ','
        << fmt(r.rep.err_h1_semi) << ',' << fmt(r.rep.err_l2) << ','
        << fmt(r.rep.norm_u_h1) << ',' << fmt(r.rep.div_residual) << ','
        << fmt(r.rep.constitutive_residual) << ','
        << fmt(r.rep.solver_residual) << '\n';
}

void write_field_grid(const std::string& path, const SolveResult& res,
                      const Mesh& mesh) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x,y,u1,u2\n";
  const int n = 50;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double x = mesh.Lx * (i + 0.5) / n;
      const double y = mesh.Ly * (j + 0.5) / n;
      const FieldEval fe = eval_field(res.u, {x, y});
      out << fmt(x) << ',' << fmt(y) << ',' << fmt(fe.value.x()) << ','
          << fmt(fe.value.y()) << '\n';
    }
}

// single log-log polyline of err_h1 (norm_u_h1 when no exact solution) vs the
// swept variable
void write_svg(const Config& cfg, const std::vector<Row>& rows) {
  const bool sweep_lambda = cfg.lambda_list.size() > 1;
  std::vector<double> xs, ys;
  for (const Row& r : rows) {
    const double x = sweep_lambda ? r.lambda : r.h;
    const double y = r.rep.err_h1 > 0 ? r.rep.err_h1 : r.rep.norm_u_h1;
    if (x > 0 && y > 0 && std::isfinite(x)) {
      xs.push_back(std::log10(x));
      ys.push_back(std::log10(y));
    }
  }
  std::string path = cfg.out_path;
  const auto dot = path.rfind('.');
  path = (dot == std::string::npos ? path : path.substr(0, dot)) + ".svg";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);

  const double W = 480, H = 360, m = 40;
  double x0 = xs.empty() ? 0 : *std::min_element(xs.begin(), xs.end());
  double x1 = xs.empty() ? 1 : *std::max_element(xs.begin(), xs.end());
  double y0 = ys.empty() ? 0 : *std::min_element(ys.begin(), ys.end());
  double y1 = ys.empty() ? 1 : *std::max_element(ys.begin(), ys.end());
  if (x1 - x0 < 1e-12) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) y1 = y0 + 1;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px = m + (xs[i] - x0) / (x1 - x0) * (W - 2 * m);
    const double py = H - m - (ys[i] - y0) / (y1 - y0) * (H - 2 * m);
    out << fmt(px) << ',' << fmt(py) << ' ';
  }
  out << "\"/>\n<text x=\"" << m << "\" y=\"" << m / 2 << "\" font-size=\"12\">"
      << cfg.experiment << " (log10 " << (sweep_lambda ? "lambda" : "h")
      << " vs log10 error)</text>\n</svg>\n";
}

int run(const Config& cfg) {
  std::vector<Row> rows;
  for (int r : cfg.refine) {
    const int n = 1 << r;
    const double L = cfg.experiment == "thermo" ? 0.1 : 1.0;
    const Mesh mesh = build_rect_mesh(n, n, L, L);
    for (double mu : cfg.mu_list)
      for (double lambda : cfg.lambda_list) {
        const ProblemSpec problem = make_problem(cfg, mu, lambda, mesh);
        try {
          const SolveResult res =
              solve_elasticity(problem, mesh, cfg.pair, cfg.method);
          rows.push_back({mesh.h(), problem.mu, problem.lambda,
                          make_report(res, problem)});
          if (cfg.experiment == "thermo") {
            std::string path = cfg.out_path;
            const auto dot = path.rfind('.');
            path = (dot == std::string::npos ? path : path.substr(0, dot)) +
                   "_field.csv";
            write_field_grid(path, res, mesh);
          }
        } catch (const std::exception& e) {
          std::cerr << "solver failure (" << cfg.experiment << ", h=2^-" << r
                    << ", mu=" << fmt(problem.mu)
                    << ", lambda=" << fmt(problem.lambda) << "): " << e.what()
                    << "\n";
          return 3;
        }
      }
  }
  write_csv(cfg, rows);
  if (cfg.plot) write_svg(cfg, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradient-robust mixed elasticity experiment runner"};
  app.require_subcommand(1);
  CLI::App* cmd = app.add_subcommand("run", "run a named experiment");

  Config cfg;
  std::string method = "robust", elements = "q2_dgp1";
  std::string refine, mu, lambda;
  cmd->add_option("experiment", cfg.experiment, "experiment name")
      ->required()
      ->check(CLI::IsMember({"ex1_incompressible", "ex2_gradient_poly",
                             "ex3_gradient_cubic", "ex4_nearly_incompressible",
                             "thermo"}));
  cmd->add_option("--method", method)->check(CLI::IsMember({"robust", "naive"}));
  cmd->add_option("--elements", elements)
      ->check(CLI::IsMember({"q2_dgp1", "q2_q1"}));
  cmd->add_option("--refine", refine, "comma list of exponents r (h = 2^-r)");
  cmd->add_option("--mu", mu, "comma list of mu values");
  cmd->add_option("--lambda", lambda, "comma list of lambda values, or inf");
  cmd->add_option("--out", cfg.out_path, "output CSV path");
  cmd->add_flag("--plot", cfg.plot, "also write a log-log SVG plot");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
    cfg.method = method == "robust" ? Method::Robust : Method::Naive;
    cfg.pair = elements == "q2_dgp1" ? ElementPair::Q2_DGP1
                                     : ElementPair::Q2_Q1;
    if (!refine.empty()) cfg.refine = parse_refine(refine);
    if (!mu.empty()) cfg.mu_list = parse_list(mu, false, "--mu");
    if (!lambda.empty()) cfg.lambda_list = parse_list(lambda, true, "--lambda");
    validate(cfg);
    apply_defaults(cfg);
    if (cfg.experiment == "thermo") {
      cfg.mu_list = {ThermoParams{}.mu()};
      cfg.lambda_list = {ThermoParams{}.lambda()};
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
