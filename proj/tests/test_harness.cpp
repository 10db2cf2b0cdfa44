#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "partlaw/harness.hpp"

using namespace partlaw;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "partlaw_harness_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config compatibility") {
  ExperimentConfig ok = make_experiment_config(TheoremTag::T1_Mu, 100, 2, 2.0, 10, 1);
  CHECK_NOTHROW(ok.validate());
  ExperimentConfig wrong = ok;
  wrong.theorem = TheoremTag::T3_Gumbel;
  CHECK_THROWS_AS(wrong.validate(), ConfigError);
  CHECK_THROWS_AS(make_experiment_config(TheoremTag::T1_Mu, 100, std::nullopt, 2.0, 10, 1), ConfigError);
  CHECK_THROWS_AS(make_experiment_config(TheoremTag::T4_TW, 100, std::nullopt, 2.0, 10, 1).validate(), ConfigError);
  CHECK_THROWS_AS(make_experiment_config(TheoremTag::T1_Mu, 100, 1, 2.0, 10, 1).validate(), ConfigError);
  ExperimentConfig zero = ok;
  zero.samples = 0;
  CHECK_THROWS_AS(zero.validate(), ConfigError);
  ExperimentConfig no_workers = ok;
  no_workers.workers = 0;
  CHECK_THROWS_AS(no_workers.validate(), ConfigError);
  ExperimentConfig jack = make_experiment_config(TheoremTag::T2_Gamma, 100, 2, 2.0, 10, 1);
  jack.alpha = 1.0;
  CHECK_THROWS_AS(jack.validate(), ConfigError);
  CHECK(make_experiment_config(TheoremTag::T3_Gumbel, 50, std::nullopt, 1.0, 1, 1).measure.kind == MeasureKind::Uniform);
  CHECK(make_experiment_config(TheoremTag::T5_LLN, 50, std::nullopt, 2.0, 1, 1).measure.kind == MeasureKind::Plancherel);
}

TEST_CASE("single sample KS") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T1_Mu, 50, 2, 2.0, 1, 3);
  const ExperimentResult r = run_experiment(c);
  REQUIRE(r.normalized_samples.size() == 1);
  const double f = r.target_cdf[0];
  CHECK(r.ks == doctest::Approx(std::max(f, 1.0 - f)));
}

TEST_CASE("worker count does not change results") {
  for (auto tag : {TheoremTag::T1_Mu, TheoremTag::T3_Gumbel, TheoremTag::T4_TW}) {
    const std::optional<int> m = tag == TheoremTag::T1_Mu ? std::optional<int>(3) : std::nullopt;
    ExperimentConfig c = make_experiment_config(tag, 300, m, 1.0, 64, 11);
    c.workers = 1;
    const ExperimentResult a = run_experiment(c);
    c.workers = 8;
    const ExperimentResult b = run_experiment(c);
    CHECK(a.normalized_samples == b.normalized_samples);
    CHECK(a.ks == b.ks);
    ExperimentResult b_as_1 = b;
    b_as_1.config_echo.workers = 1;
    CHECK(result_json(a) == result_json(b_as_1));
  }
}

TEST_CASE("replicates use stream (seed, index)") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T4_TW, 200, std::nullopt, 1.0, 5, 42);
  const PartitionSampler sampler(c.measure);
  std::vector<double> direct;
  for (std::uint64_t i = 0; i < 5; ++i) {
    RngStream rng(42, i);
    const Partition k = sampler.draw(rng);
    direct.push_back(normalize(eigenvalue(k, 1.0), 200, TheoremTag::T4_TW, {}));
    CHECK(experiment_replicate(c, sampler, i) == direct.back());
  }
  std::sort(direct.begin(), direct.end());
  CHECK(run_experiment(c).normalized_samples == direct);
}

TEST_CASE("CSV emission") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T2_Gamma, 200, 2, 1.0, 50, 5);
  c.output_path = scratch("gamma.csv").string();
  c.bins = 10;
  const ExperimentResult r = run_experiment(c);
  emit(r);
  const std::string first = slurp(c.output_path);
  std::istringstream lines(first);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "index,normalized_value,ecdf,target_cdf");
  int rows = 1;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 51);
  CHECK(std::filesystem::exists(c.output_path + ".meta.json"));
  CHECK(slurp(c.output_path + ".meta.json").find("\"seed\": 5") != std::string::npos);
  const std::string bins = slurp(c.output_path + ".bins.csv");
  CHECK(std::count(bins.begin(), bins.end(), '\n') == 11);

  // Same configuration, fresh run: byte-identical files.
  emit(run_experiment(c));
  CHECK(slurp(c.output_path) == first);
}

TEST_CASE("JSON emission round trips") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T5_LLN, 300, std::nullopt, 2.0, 20, 9);
  c.output_format = OutputFormat::Json;
  c.output_path = scratch("lln.json").string();
  const ExperimentResult r = run_experiment(c);
  emit(r);
  const std::string text = slurp(c.output_path);
  const ExperimentResult back = result_from_json(text);
  CHECK(back.normalized_samples == r.normalized_samples);
  CHECK(back.ecdf == r.ecdf);
  CHECK(back.target_cdf == r.target_cdf);
  CHECK(back.ks == r.ks);
  CHECK(back.target_law == r.target_law);
  CHECK(back.config_echo.seed == 9);
  CHECK(back.config_echo.theorem == TheoremTag::T5_LLN);
  CHECK(result_json(back) == text);
  CHECK(text.find("\"version\"") != std::string::npos);
  CHECK(text.find("runtime") == std::string::npos);
  CHECK_THROWS_AS(result_from_json("{}"), ConfigError);
}

TEST_CASE("emit reports unwritable paths") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T1_Mu, 20, 2, 2.0, 3, 1);
  c.output_path = "/nonexistent-dir/x.csv";
  CHECK_THROWS_AS(emit(run_experiment(c)), ResourceError);
}

TEST_CASE("mismatched law gives a large KS") {
  ExperimentConfig c = make_experiment_config(TheoremTag::T4_TW, 5000, std::nullopt, 1.0, 800, 2);
  const ExperimentResult right = run_experiment(c);
  const ExperimentResult wrong = run_experiment(c, LimitLaw::gumbel(1.0));
  CHECK(wrong.ks > 0.2);
  CHECK(right.ks < wrong.ks);
}
