// partlaw: sample random partitions, evaluate eigenvalue statistics and
// limit laws, and run seeded Monte Carlo experiments.
//
// Exit codes: 0 success, 1 check failure, 2 configuration error,
// 3 resource or numeric error.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "partlaw/checks.hpp"
#include "partlaw/harness.hpp"
#include "partlaw/limits.hpp"
#include "partlaw/measures.hpp"
#include "partlaw/spectra.hpp"

namespace {

using namespace partlaw;

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

struct MeasureFlags {
  std::string measure;
  int n = 0;
  std::optional<int> m;
  bool exact_length = false;
  std::optional<double> alpha;
  int count = 1;
  std::uint64_t seed = 0;
};

void add_measure_flags(CLI::App* cmd, MeasureFlags& f) {
  cmd->add_option("--measure", f.measure, "runiform | uniform | plancherel | rjack")
      ->required()
      ->check(CLI::IsMember({"runiform", "uniform", "plancherel", "rjack"}));
  cmd->add_option("--n", f.n, "size of the partitions")->required();
  cmd->add_option("--m", f.m, "length bound (restricted measures)");
  cmd->add_flag("--exact-length", f.exact_length, "exactly m parts instead of at most m");
  cmd->add_option("--alpha", f.alpha, "Jack parameter; also the eigenvalue parameter");
  cmd->add_option("--count", f.count, "number of draws")->required();
  cmd->add_option("--seed", f.seed, "64-bit seed")->required();
}

MeasureSpec measure_spec(const MeasureFlags& f) {
  MeasureSpec spec;
  if (f.measure == "runiform") {
    if (!f.m) throw ConfigError("--measure runiform requires --m");
    spec = MeasureSpec::restricted_uniform(f.n, *f.m, f.exact_length);
  } else if (f.measure == "uniform") {
    spec = MeasureSpec::uniform(f.n);
  } else if (f.measure == "plancherel") {
    spec = MeasureSpec::plancherel(f.n);
  } else {
    if (!f.m || !f.alpha) throw ConfigError("--measure rjack requires --m and --alpha");
    spec = MeasureSpec::restricted_jack(f.n, *f.m, *f.alpha, f.exact_length);
  }
  if (f.count < 0) throw ConfigError("--count must be nonnegative");
  spec.validate();
  return spec;
}

void run_sample(const MeasureFlags& f) {
  const PartitionSampler sampler(measure_spec(f));
  for (int i = 0; i < f.count; ++i) {
    RngStream rng(f.seed, static_cast<std::uint64_t>(i));
    const Partition kappa = sampler.draw(rng);
    nlohmann::json line;
    line["index"] = i;
    line["n"] = kappa.n();
    line["m"] = kappa.length();
    line["parts"] = std::vector<int>(kappa.parts().begin(), kappa.parts().end());
    std::cout << line.dump() << '\n';
  }
}

void run_spectrum(const MeasureFlags& f) {
  const PartitionSampler sampler(measure_spec(f));
  const double alpha = f.alpha.value_or(1.0);
  if (!(alpha > 0.0)) throw ConfigError("--alpha must be positive");
  std::cout << "index,n,m,lambda\n" << std::setprecision(17);
  for (int i = 0; i < f.count; ++i) {
    RngStream rng(f.seed, static_cast<std::uint64_t>(i));
    const Partition kappa = sampler.draw(rng);
    std::cout << i << ',' << kappa.n() << ',' << kappa.length() << ',' << eigenvalue(kappa, alpha) << '\n';
  }
}

struct ExperimentFlags {
  std::string theorem;
  int n = 0;
  std::optional<int> m;
  double alpha = 1.0;
  bool exact_length = false;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  int workers = 1;
  int bins = 40;
  std::optional<double> lln_scale;
};

void run_experiment_cmd(const ExperimentFlags& f) {
  ExperimentConfig config =
      make_experiment_config(theorem_from_string(f.theorem), f.n, f.m, f.alpha, f.samples, f.seed, f.exact_length);
  config.output_path = f.out;
  config.output_format = output_format_from_string(f.format);
  config.workers = f.workers;
  config.bins = f.bins;
  config.lln_scale = f.lln_scale;
  const ExperimentResult result = run_experiment(config);
  emit(result);
  std::cerr << "ks=" << std::setprecision(6) << result.ks << " law=" << result.target_law
            << " samples=" << result.normalized_samples.size() << " runtime_s=" << result.runtime_seconds << '\n';
}

struct LawFlags {
  std::string law;
  std::optional<int> m;
  double alpha = 1.0;
  double from = 0.0;
  double to = 1.0;
  int points = 101;
};

void run_limit_cdf(const LawFlags& f) {
  if (f.points < 1) throw ConfigError("--points must be at least 1");
  auto need_m = [&] {
    if (!f.m) throw ConfigError("--law " + f.law + " requires --m");
    return *f.m;
  };
  LimitLaw law = LimitLaw::point_mass();
  try {
    if (f.law == "mu")
      law = LimitLaw::mu(need_m(), f.alpha);
    else if (f.law == "gamma")
      law = LimitLaw::gamma(need_m(), f.alpha);
    else if (f.law == "gumbel")
      law = LimitLaw::gumbel(f.alpha);
    else
      law = LimitLaw::tracy_widom2();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const bool has_se = law.kind() == LimitLaw::Kind::Mu && law.m() > 3;
  std::cout << "x,cdf,pdf" << (has_se ? ",cdf_standard_error" : "") << '\n' << std::setprecision(17);
  for (int k = 0; k < f.points; ++k) {
    const double x = f.points == 1 ? f.from : f.from + (f.to - f.from) * k / (f.points - 1);
    std::cout << x << ',' << law.cdf(x) << ',';
    const double p = law.pdf(x);
    if (std::isfinite(p)) std::cout << p;
    if (has_se) std::cout << ',' << law.cdf_standard_error(x);
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random partitions, Laplace-Beltrami eigenvalues and their limit laws"};
  app.require_subcommand(1);

  MeasureFlags sample_flags;
  auto* sample = app.add_subcommand("sample", "draw partitions; one JSON object per line");
  add_measure_flags(sample, sample_flags);

  MeasureFlags spectrum_flags;
  auto* spectrum = app.add_subcommand("spectrum", "draw partitions and print their eigenvalues as CSV");
  add_measure_flags(spectrum, spectrum_flags);

  ExperimentFlags exp;
  auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo run against a limit law");
  experiment->add_option("--theorem", exp.theorem, "t1 | t2 | t3 | t4 | t5")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5"}));
  experiment->add_option("--n", exp.n)->required();
  experiment->add_option("--m", exp.m);
  experiment->add_option("--alpha", exp.alpha);
  experiment->add_flag("--exact-length", exp.exact_length, "t1/t2: exactly m parts");
  experiment->add_option("--samples", exp.samples)->required();
  experiment->add_option("--seed", exp.seed)->required();
  experiment->add_option("--out", exp.out)->required();
  experiment->add_option("--format", exp.format)->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--workers", exp.workers);
  experiment->add_option("--bins", exp.bins, "bin-count sidecar; 0 disables");
  experiment->add_option("--lln-scale", exp.lln_scale, "t5: the divergent a_n (default log n)");

  LawFlags law_flags;
  auto* limit_cdf = app.add_subcommand("limit-cdf", "tabulate a limit law as CSV");
  limit_cdf->add_option("--law", law_flags.law)->required()->check(CLI::IsMember({"mu", "gamma", "gumbel", "tw2"}));
  limit_cdf->add_option("--m", law_flags.m);
  limit_cdf->add_option("--alpha", law_flags.alpha);
  limit_cdf->add_option("--from", law_flags.from)->required();
  limit_cdf->add_option("--to", law_flags.to)->required();
  limit_cdf->add_option("--points", law_flags.points)->required();

  std::string suite;
  auto* check = app.add_subcommand("check", "run an exact-oracle self-check suite");
  check->add_option("--suite", suite)->required()->check(CLI::IsMember(check_suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sample) run_sample(sample_flags);
    if (*spectrum) run_spectrum(spectrum_flags);
    if (*experiment) run_experiment_cmd(exp);
    if (*limit_cdf) run_limit_cdf(law_flags);
    if (*check) return run_check_suite(suite, std::cout) ? 0 : kExitCheckFailed;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const RangeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return 0;
}
