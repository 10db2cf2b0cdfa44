#include "partlaw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "partlaw/statistics.hpp"

namespace partlaw {

using nlohmann::json;

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + s + "'");
}

namespace {

bool theorem_accepts(TheoremTag tag, MeasureKind kind) {
  switch (tag) {
    case TheoremTag::T1_Mu: return kind == MeasureKind::RestrictedUniform;
    case TheoremTag::T2_Gamma: return kind == MeasureKind::RestrictedJack;
    case TheoremTag::T3_Gumbel: return kind == MeasureKind::Uniform;
    case TheoremTag::T4_TW:
    case TheoremTag::T5_LLN: return kind == MeasureKind::Plancherel;
  }
  return false;
}

MeasureKind measure_from_string(const std::string& s) {
  if (s == "runiform") return MeasureKind::RestrictedUniform;
  if (s == "uniform") return MeasureKind::Uniform;
  if (s == "plancherel") return MeasureKind::Plancherel;
  if (s == "rjack") return MeasureKind::RestrictedJack;
  throw ConfigError("unknown measure '" + s + "'");
}

double lln_scale_or_default(const ExperimentConfig& c) {
  return c.lln_scale ? *c.lln_scale : std::log(static_cast<double>(c.measure.n));
}

}  // namespace

void ExperimentConfig::validate() const {
  measure.validate();
  if (measure.n < 1) throw ConfigError("experiment: n must be positive");
  if (!theorem_accepts(theorem, measure.kind))
    throw ConfigError("experiment: theorem " + to_string(theorem) + " is not stated for the " +
                      to_string(measure.kind) + " measure");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("experiment: alpha must be positive");
  if (samples < 1) throw ConfigError("experiment: samples must be at least 1");
  if (workers < 1) throw ConfigError("experiment: workers must be at least 1");
  if (bins < 0) throw ConfigError("experiment: bins must be nonnegative");
  if ((theorem == TheoremTag::T1_Mu || theorem == TheoremTag::T2_Gamma) && *measure.m < 2)
    throw ConfigError("experiment: the limit law needs m >= 2");
  if (theorem == TheoremTag::T2_Gamma && *measure.alpha != alpha)
    throw ConfigError("experiment: Jack measure alpha must equal the eigenvalue alpha");
  if (theorem == TheoremTag::T4_TW && alpha != 1.0) throw ConfigError("experiment: t4 is stated for alpha = 1 only");
  if (theorem == TheoremTag::T5_LLN && lln_scale && !(*lln_scale > 0.0))
    throw ConfigError("experiment: the t5 scale a_n must be positive");
}

ExperimentConfig make_experiment_config(TheoremTag theorem, int n, std::optional<int> m, double alpha, int samples,
                                        std::uint64_t seed, bool exact_length) {
  ExperimentConfig c;
  c.theorem = theorem;
  c.alpha = alpha;
  c.samples = samples;
  c.seed = seed;
  auto need_m = [&] {
    if (!m) throw ConfigError("experiment: theorem " + to_string(theorem) + " requires --m");
    return *m;
  };
  switch (theorem) {
    case TheoremTag::T1_Mu: c.measure = MeasureSpec::restricted_uniform(n, need_m(), exact_length); break;
    case TheoremTag::T2_Gamma: c.measure = MeasureSpec::restricted_jack(n, need_m(), alpha, exact_length); break;
    case TheoremTag::T3_Gumbel: c.measure = MeasureSpec::uniform(n); break;
    case TheoremTag::T4_TW:
    case TheoremTag::T5_LLN: c.measure = MeasureSpec::plancherel(n); break;
  }
  return c;
}

LimitLaw target_law(const ExperimentConfig& config) {
  switch (config.theorem) {
    case TheoremTag::T1_Mu: return LimitLaw::mu(*config.measure.m, config.alpha);
    case TheoremTag::T2_Gamma: return LimitLaw::gamma(*config.measure.m, config.alpha);
    case TheoremTag::T3_Gumbel: return LimitLaw::gumbel(config.alpha);
    case TheoremTag::T4_TW: return LimitLaw::tracy_widom2();
    case TheoremTag::T5_LLN: return LimitLaw::point_mass(0.0);
  }
  throw ConfigError("experiment: unknown theorem");
}

double experiment_replicate(const ExperimentConfig& config, const PartitionSampler& sampler, std::uint64_t index) {
  RngStream rng(config.seed, index);
  const Partition kappa = sampler.draw(rng);
  const double lambda = eigenvalue(kappa, config.alpha);
  NormalizationParams params;
  params.alpha = config.alpha;
  params.m = config.measure.m;
  if (config.theorem == TheoremTag::T5_LLN) params.lln_scale = lln_scale_or_default(config);
  return normalize(lambda, config.measure.n, config.theorem, params);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, target_law(config));
}

ExperimentResult run_experiment(const ExperimentConfig& config, const LimitLaw& law) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  // Tables are built here, once, before any worker starts.
  const PartitionSampler sampler(config.measure);

  const auto total = static_cast<std::size_t>(config.samples);
  std::vector<double> values(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        values[i] = experiment_replicate(config, sampler, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
        return;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::min<int>(config.workers, config.samples));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  std::sort(values.begin(), values.end());
  result.normalized_samples = std::move(values);
  result.ecdf = ecdf_values(result.normalized_samples);
  result.target_cdf.reserve(total);
  for (double x : result.normalized_samples) result.target_cdf.push_back(law.cdf(x));
  result.ks = ks_statistic(result.normalized_samples, law);
  result.target_law = law.name();
  result.config_echo = config;
  result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["measure"] = to_string(c.measure.kind);
  j["n"] = c.measure.n;
  j["m"] = c.measure.m ? json(*c.measure.m) : json(nullptr);
  j["exact_length"] = c.measure.exact_length;
  j["theorem"] = to_string(c.theorem);
  j["alpha"] = c.alpha;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["output_path"] = c.output_path;
  j["output_format"] = to_string(c.output_format);
  j["lln_scale"] = c.lln_scale ? json(*c.lln_scale) : json(nullptr);
  j["bins"] = c.bins;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.measure.kind = measure_from_string(j.at("measure").get<std::string>());
  c.measure.n = j.at("n").get<int>();
  if (!j.at("m").is_null()) c.measure.m = j.at("m").get<int>();
  c.measure.exact_length = j.at("exact_length").get<bool>();
  c.theorem = theorem_from_string(j.at("theorem").get<std::string>());
  c.alpha = j.at("alpha").get<double>();
  if (c.measure.kind == MeasureKind::RestrictedJack) c.measure.alpha = c.alpha;
  c.samples = j.at("samples").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.workers = j.at("workers").get<int>();
  c.output_path = j.at("output_path").get<std::string>();
  c.output_format = output_format_from_string(j.at("output_format").get<std::string>());
  if (!j.at("lln_scale").is_null()) c.lln_scale = j.at("lln_scale").get<double>();
  c.bins = j.at("bins").get<int>();
  return c;
}

// Worker count does not change the result, so it stays out of the files.
json metadata_object(const ExperimentResult& r) {
  json meta;
  meta["library"] = "partlaw";
  meta["version"] = kLibraryVersion;
  meta["seed"] = r.config_echo.seed;
  json cfg = config_to_json(r.config_echo);
  cfg.erase("workers");
  meta["config"] = cfg;
  meta["target_law"] = r.target_law;
  meta["ks"] = r.ks;
  meta["samples"] = r.normalized_samples.size();
  return meta;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot open '" + path + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw ResourceError("write to '" + path + "' failed");
}

}  // namespace

std::string metadata_json(const ExperimentResult& result) { return metadata_object(result).dump(2) + "\n"; }

std::string result_json(const ExperimentResult& result) {
  json j;
  j["metadata"] = metadata_object(result);
  json cfg = config_to_json(result.config_echo);
  cfg.erase("workers");
  j["config_echo"] = cfg;
  j["normalized_samples"] = result.normalized_samples;
  j["ecdf"] = result.ecdf;
  j["target_cdf"] = result.target_cdf;
  j["ks"] = result.ks;
  j["target_law"] = result.target_law;
  return j.dump(2) + "\n";
}

ExperimentResult result_from_json(const std::string& text) {
  ExperimentResult r;
  try {
    const json j = json::parse(text);
    json cfg = j.at("config_echo");
    cfg["workers"] = 1;
    r.config_echo = config_from_json(cfg);
    r.normalized_samples = j.at("normalized_samples").get<std::vector<double>>();
    r.ecdf = j.at("ecdf").get<std::vector<double>>();
    r.target_cdf = j.at("target_cdf").get<std::vector<double>>();
    r.ks = j.at("ks").get<double>();
    r.target_law = j.at("target_law").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("result_from_json: ") + e.what());
  }
  return r;
}

void write_result_csv(const ExperimentResult& result, std::ostream& out) {
  out << "index,normalized_value,ecdf,target_cdf\n" << std::setprecision(17);
  for (std::size_t i = 0; i < result.normalized_samples.size(); ++i)
    out << i << ',' << result.normalized_samples[i] << ',' << result.ecdf[i] << ',' << result.target_cdf[i] << '\n';
}

void emit(const ExperimentResult& result) {
  const ExperimentConfig& c = result.config_echo;
  if (c.output_path.empty()) throw ConfigError("emit: output path is empty");
  {
    auto out = open_output(c.output_path);
    if (c.output_format == OutputFormat::Csv)
      write_result_csv(result, out);
    else
      out << result_json(result);
    finish_output(out, c.output_path);
  }
  if (c.output_format == OutputFormat::Csv) {
    const std::string path = c.output_path + ".meta.json";
    auto out = open_output(path);
    out << metadata_json(result);
    finish_output(out, path);
  }
  if (c.bins > 0 && !result.normalized_samples.empty()) {
    const std::string path = c.output_path + ".bins.csv";
    const double lo = result.normalized_samples.front();
    const double hi = result.normalized_samples.back();
    const auto counts = bin_counts(result.normalized_samples, lo, hi, c.bins);
    auto out = open_output(path);
    out << "bin_lo,bin_hi,count\n" << std::setprecision(17);
    const double width = (hi > lo ? hi - lo : 1.0) / c.bins;
    for (int b = 0; b < c.bins; ++b)
      out << lo + b * width << ',' << lo + (b + 1) * width << ',' << counts[static_cast<std::size_t>(b)] << '\n';
    finish_output(out, path);
  }
}

}  // namespace partlaw
