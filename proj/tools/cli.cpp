#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "maxtsp/driver.hpp"
#include "maxtsp/error.hpp"
#include "maxtsp/exact.hpp"
#include "maxtsp/instance.hpp"

namespace maxtsp::cli {

namespace {

using nlohmann::json;

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string join_tour(const Cycle& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(order[i]);
  }
  return s;
}

struct SolveOptions {
  std::string file;
  std::optional<double> eptas;
  bool asymptotic = false;
  std::optional<double> algo_a;
  bool exact = false;
  bool five_sixths = false;
  std::optional<double> dim;
  std::string out = "text";
};

struct SolverSpec {
  enum class Kind { eptas, asymptotic, algo_a, exact, five_sixths } kind;
  double param = 0.0;
};

SolverSpec parse_solver(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto param = [&]() {
    if (colon == std::string::npos) {
      throw InvalidArgument("solver '" + name + "' needs a parameter, e.g. " + name + ":0.5");
    }
    return std::stod(text.substr(colon + 1));
  };
  if (name == "eptas") return {SolverSpec::Kind::eptas, param()};
  if (name == "algoA") return {SolverSpec::Kind::algo_a, param()};
  if (name == "asymptotic") return {SolverSpec::Kind::asymptotic, 0.0};
  if (name == "exact") return {SolverSpec::Kind::exact, 0.0};
  if (name == "five-sixths") return {SolverSpec::Kind::five_sixths, 0.0};
  throw InvalidArgument("unknown solver '" + text + "'");
}

double require_dim(const std::optional<double>& dim, const char* what) {
  if (!dim) throw InvalidArgument(std::string(what) + " needs --dim");
  return *dim;
}

SolveResult run_solver(const Instance& inst, const SolverSpec& spec,
                       const std::optional<double>& dim) {
  switch (spec.kind) {
    case SolverSpec::Kind::eptas:
      return eptas(inst, spec.param, require_dim(dim, "eptas"));
    case SolverSpec::Kind::asymptotic:
      return asymptotic(inst, require_dim(dim, "asymptotic"));
    case SolverSpec::Kind::algo_a:
      return algorithm_a_solve(inst, spec.param, dim);
    case SolverSpec::Kind::exact:
      return exact(inst);
    case SolverSpec::Kind::five_sixths:
      return five_sixths(inst);
  }
  throw InvalidArgument("unknown solver");
}

int do_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const int chosen = opt.eptas.has_value() + opt.asymptotic + opt.algo_a.has_value() +
                     opt.exact + opt.five_sixths;
  if (chosen != 1) {
    err << "solve: choose exactly one of --eptas, --asymptotic, --algoA, --exact, "
           "--five-sixths\n";
    return 2;
  }
  SolverSpec spec{SolverSpec::Kind::exact, 0.0};
  if (opt.eptas) spec = {SolverSpec::Kind::eptas, *opt.eptas};
  if (opt.asymptotic) spec = {SolverSpec::Kind::asymptotic, 0.0};
  if (opt.algo_a) spec = {SolverSpec::Kind::algo_a, *opt.algo_a};
  if (opt.five_sixths) spec = {SolverSpec::Kind::five_sixths, 0.0};

  const Instance inst = load_instance_file(opt.file);
  const SolveResult result = run_solver(inst, spec, opt.dim ? opt.dim : inst.dim_hint());
  if (opt.out == "json") {
    out << format_solution_json(result.tour, result.certificate) << "\n";
  } else {
    out << format_solution_text(result.tour, result.certificate);
  }
  if (!result.certificate.certified) {
    err << "WARNING: certified = false; " << result.certificate.note << "\n";
  }
  return 0;
}

struct GenerateOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::string out;
};

int do_generate(const GenerateOptions& opt, std::ostream& out) {
  GeneratorSpec spec;
  spec.family = parse_family(opt.family);
  spec.n = opt.n;
  spec.d = opt.d;
  spec.seed = opt.seed;
  spec.scale = opt.scale;
  const Instance inst = generate(spec);
  save_instance_file(inst, opt.out);
  out << "wrote " << opt.out << " (" << to_string(spec.family) << ", n = " << inst.size()
      << ")\n";
  return 0;
}

int do_validate(const std::string& file, double tol, std::ostream& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const Instance inst = parse_instance(buf.str());
  const ValidationReport report = validate_metric(inst, tol);
  out << "n = " << inst.size() << "\n" << report.describe();
  return report.passed ? 0 : 1;
}

struct BenchOptions {
  std::string family;
  std::vector<std::size_t> n_list;
  std::size_t seeds = 1;
  std::string solver;
  std::optional<double> dim;
  std::size_t d = 2;
};

int do_bench(const BenchOptions& opt, std::ostream& out) {
  const SolverSpec spec = parse_solver(opt.solver);
  const Family family = parse_family(opt.family);

  out << "n\tseed\tweight_cover\tk_initial\tk_final\tweight_tour\tclaimed_bound\t"
         "certified\tratio_cover\tratio_opt\n"
      << std::flush;
  for (std::size_t n : opt.n_list) {
    for (std::size_t s = 1; s <= opt.seeds; ++s) {
      GeneratorSpec gen{family, n, opt.d, s, 1.0};
      const Instance inst = generate(gen);
      const auto dim = opt.dim ? opt.dim : inst.dim_hint();
      const SolveResult r = run_solver(inst, spec, dim);
      const auto& c = r.certificate;
      std::string ratio_opt = "-";
      if (n <= 10) {
        const double opt_weight = held_karp_max(inst).weight;
        ratio_opt = format_double(opt_weight > 0.0 ? r.tour.weight / opt_weight : 1.0);
      }
      out << n << '\t' << s << '\t' << format_double(c.weight_cover) << '\t'
          << c.k_initial << '\t'
          << (c.k_after_gluing ? std::to_string(*c.k_after_gluing) : "-") << '\t'
          << format_double(c.weight_tour) << '\t' << format_double(c.claimed_bound)
          << '\t' << (c.certified ? "true" : "false") << '\t'
          << format_double(c.observed_ratio()) << '\t' << ratio_opt << '\n'
          << std::flush;
    }
  }
  return 0;
}

}  // namespace

std::string format_solution_text(const Tour& tour, const Certificate& cert) {
  std::ostringstream out;
  out << "tour = " << join_tour(canonical_cycle(tour.order)) << "\n";
  out << "weight = " << format_double(tour.weight) << "\n";
  out << cert.to_text();
  return out.str();
}

std::string format_solution_json(const Tour& tour, const Certificate& cert) {
  json c;
  c["branch"] = std::string(to_string(cert.branch));
  c["certified"] = cert.certified;
  c["epsilon"] = optional_json(cert.epsilon);
  c["delta"] = optional_json(cert.delta);
  c["dim"] = optional_json(cert.dim);
  c["n_threshold"] = optional_json(cert.n_threshold);
  c["n"] = cert.n;
  c["k_initial"] = cert.k_initial;
  c["k_after_gluing"] = cert.k_after_gluing ? json(*cert.k_after_gluing) : json(nullptr);
  c["gluings"] = cert.gluings;
  c["weight_cover"] = cert.weight_cover;
  c["weight_after_gluing"] = optional_json(cert.weight_after_gluing);
  c["weight_tour"] = cert.weight_tour;
  c["claimed_bound"] = cert.claimed_bound;
  c["claimed_error"] = optional_json(cert.claimed_error);
  c["posterior_bound"] = optional_json(cert.posterior_bound);
  c["closed_form_bound"] = optional_json(cert.closed_form_bound);
  c["r_tau"] = optional_json(cert.r_tau);
  c["t_min"] = optional_json(cert.t_min);
  c["observed_ratio"] = cert.observed_ratio();
  c["note"] = cert.note;

  json doc;
  doc["tour"] = canonical_cycle(tour.order);
  doc["weight"] = tour.weight;
  doc["certificate"] = std::move(c);
  return doc.dump();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric maximum TSP solver"};
  app.name("maxtsp");
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", solve_opt.file, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--eptas", solve_opt.eptas, "(1-eps)-approximation scheme");
  solve->add_flag("--asymptotic", solve_opt.asymptotic, "Asymptotically exact algorithm");
  solve->add_option("--algoA", solve_opt.algo_a, "Algorithm A with gluing parameter delta");
  solve->add_flag("--exact", solve_opt.exact, "Exact subset DP");
  solve->add_flag("--five-sixths", solve_opt.five_sixths, "5/6-approximation");
  solve->add_option("--dim", solve_opt.dim, "Doubling dimension upper bound");
  solve->add_option("--out", solve_opt.out, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  GenerateOptions gen_opt;
  auto* gen = app.add_subcommand("generate", "Write a random instance file");
  gen->add_option("--family", gen_opt.family, "line | euclidean | random-metric")
      ->required()
      ->check(CLI::IsMember({"line", "euclidean", "random-metric"}));
  gen->add_option("--n", gen_opt.n, "Number of points")->required();
  gen->add_option("--d", gen_opt.d, "Coordinate dimension (euclidean)");
  gen->add_option("--seed", gen_opt.seed, "Random seed")->required();
  gen->add_option("--scale", gen_opt.scale, "Coordinate / weight range");
  gen->add_option("--out", gen_opt.out, "Output file")->required();

  std::string validate_file;
  double validate_tol = kDefaultMetricTolerance;
  auto* val = app.add_subcommand("validate", "Check the metric axioms");
  val->add_option("file", validate_file, "Instance file")->required()->check(CLI::ExistingFile);
  val->add_option("--tol", validate_tol, "Tolerance (scaled by max distance)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Run a solver over generated instances");
  bench->add_option("--family", bench_opt.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"line", "euclidean", "random-metric"}));
  bench->add_option("--n-list", bench_opt.n_list, "Comma-separated sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--seeds", bench_opt.seeds, "Seeds per size (1..k)")->required();
  bench->add_option("--solver", bench_opt.solver,
                    "eptas:<eps> | asymptotic | algoA:<delta> | exact | five-sixths")
      ->required();
  bench->add_option("--dim", bench_opt.dim, "Doubling dimension upper bound");
  bench->add_option("--d", bench_opt.d, "Coordinate dimension (euclidean)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*solve) return do_solve(solve_opt, out, err);
    if (*gen) return do_generate(gen_opt, out);
    if (*val) return do_validate(validate_file, validate_tol, out);
    if (*bench) return do_bench(bench_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maxtsp::cli
