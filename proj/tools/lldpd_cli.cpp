// lldpd: fit, simulate, influence and asymptotics commands.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lldpd.hpp"

namespace {

struct Flags {
  std::vector<double> tau;
  std::string data;
  std::string builtin;
  std::vector<std::size_t> n;
  std::vector<double> beta;
  double alpha = 1.0;
  std::size_t reps = 1000;
  int contamination = 1;
  std::uint64_t seed = 20240101;
  std::string format = "text";
  std::size_t workers = 0;
  std::string out;
  std::string param = "alpha";
  double x_min = 0.01;
  double x_max = 10.0;
  std::size_t points = 200;
  std::string scale = "log";
};

lldpd::Sample load(const Flags& f) {
  if (!f.data.empty() && !f.builtin.empty()) throw CLI::ValidationError("--data and --builtin are exclusive");
  if (!f.builtin.empty()) return lldpd::builtin_dataset(f.builtin);
  if (!f.data.empty()) return lldpd::ingest_file(f.data);
  throw CLI::RequiredError("--data or --builtin");
}

int emit(const lldpd::CommandOutput& r, const Flags& f) {
  if (f.out.empty()) {
    std::cout << r.document;
  } else {
    std::ofstream file(f.out);
    if (!file) throw lldpd::DomainError("cannot write '" + f.out + "'");
    file << r.document;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum density power divergence estimation for the log-logistic distribution"};
  app.require_subcommand(1);
  Flags f;

  auto add_tau = [&](CLI::App* cmd, const std::string& defaults) {
    cmd->add_option("--tau", f.tau, "Tuning parameter(s), repeatable or comma separated (default " + defaults + ")")
        ->delimiter(',');
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", f.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", f.out, "Write the document to this file instead of stdout");
  };

  auto* fit = app.add_subcommand("fit", "Fit (alpha, beta) for each tau, with sandwich standard errors");
  add_tau(fit, "0,0.1,...,1");
  fit->add_option("--data", f.data, "Delimited text file of positive values");
  fit->add_option("--builtin", f.builtin, "Bundled dataset")
      ->check(CLI::IsMember(lldpd::builtin_names()));
  add_format(fit);

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo Bias/RMSE comparison of the estimators");
  add_tau(sim, "0,0.1,...,1");
  sim->add_option("--alpha", f.alpha, "True scale")->capture_default_str();
  sim->add_option("--beta", f.beta, "True shape(s) (default 1.5,2.5,5,10)")->delimiter(',');
  sim->add_option("--n", f.n, "Sample size(s) (default 10,25,50,75,100)")->delimiter(',');
  sim->add_option("--reps", f.reps, "Replications per scenario")->capture_default_str();
  sim->add_option("--case", f.contamination, "Contamination case 1-5")->capture_default_str();
  sim->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  sim->add_option("--workers", f.workers, "Worker threads (0: all cores)")->capture_default_str();
  add_format(sim);

  auto* inf = app.add_subcommand("influence", "Influence-function grid");
  add_tau(inf, "0.1,0.3,0.9");
  inf->add_option("--alpha", f.alpha, "Scale")->capture_default_str();
  inf->add_option("--beta", f.beta, "Shape (default 2)");
  inf->add_option("--param", f.param, "Target parameter")
      ->check(CLI::IsMember({"alpha", "beta"}))
      ->capture_default_str();
  inf->add_option("--x-min", f.x_min, "Grid start")->capture_default_str();
  inf->add_option("--x-max", f.x_max, "Grid end")->capture_default_str();
  inf->add_option("--points", f.points, "Grid size")->capture_default_str();
  inf->add_option("--scale", f.scale, "Grid spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  add_format(inf);

  auto* asy = app.add_subcommand("asymptotics", "J, K, xi and the sandwich covariance");
  add_tau(asy, "0,0.1,...,1");
  asy->add_option("--alpha", f.alpha, "Scale")->capture_default_str();
  asy->add_option("--beta", f.beta, "Shape (default 2)");
  add_format(asy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lldpd::kExitUsage;
  }

  try {
    const lldpd::OutputFormat format = lldpd::format_from_string(f.format);
    const std::vector<double> taus = f.tau.empty() ? lldpd::default_tau_grid() : f.tau;
    auto single_beta = [&] {
      if (f.beta.size() > 1) throw CLI::ValidationError("--beta takes one value for this command");
      return f.beta.empty() ? 2.0 : f.beta.front();
    };

    if (*fit) return emit(lldpd::run_fit(load(f), taus, format), f);

    if (*sim) {
      lldpd::SimulationRequest req;
      req.alpha = f.alpha;
      if (!f.beta.empty()) req.betas = f.beta;
      if (!f.n.empty()) req.sizes = f.n;
      req.taus = taus;
      req.replications = f.reps;
      req.contamination = f.contamination;
      req.seed = f.seed;
      req.workers = f.workers;
      return emit(lldpd::run_simulate(req, format), f);
    }

    if (*inf) {
      lldpd::InfluenceRequest req;
      req.params = lldpd::Params(f.alpha, single_beta());
      req.target = f.param == "beta" ? lldpd::IFTarget::Beta : lldpd::IFTarget::Alpha;
      req.taus = f.tau.empty() ? std::vector<double>{0.1, 0.3, 0.9} : f.tau;
      req.x_min = f.x_min;
      req.x_max = f.x_max;
      req.points = f.points;
      req.scale = f.scale == "linear" ? lldpd::GridScale::Linear : lldpd::GridScale::Log;
      return emit(lldpd::run_influence(req, format), f);
    }

    return emit(lldpd::run_asymptotics(lldpd::Params(f.alpha, single_beta()), taus, format), f);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return lldpd::kExitUsage;
  } catch (const lldpd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return lldpd::kExitParse;
  } catch (const lldpd::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return lldpd::kExitDomain;
  } catch (const lldpd::ConditioningError& e) {
    std::cerr << "conditioning error: " << e.what() << '\n';
    return lldpd::kExitConditioning;
  }
}
