#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partlaw/limits.hpp"
#include "partlaw/measures.hpp"
#include "partlaw/spectra.hpp"

namespace partlaw {

inline constexpr const char* kLibraryVersion = "1.0.0";

enum class OutputFormat { Csv, Json };

std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& s);

struct ExperimentConfig {
  MeasureSpec measure;
  TheoremTag theorem = TheoremTag::T1_Mu;
  double alpha = 1.0;               // the eigenvalue parameter
  int samples = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string output_path;
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<double> lln_scale;  // a_n for T5; log n when absent
  int bins = 0;                     // bin-count sidecar when positive

  // ConfigError when the measure does not match the theorem or a parameter
  // is out of range.
  void validate() const;
};

// The measure each theorem is stated for: T1 restricted uniform, T2
// restricted Jack, T3 uniform, T4 and T5 Plancherel.
ExperimentConfig make_experiment_config(TheoremTag theorem, int n, std::optional<int> m, double alpha, int samples,
                                        std::uint64_t seed, bool exact_length = false);

// The law the normalized statistic converges to under config.
LimitLaw target_law(const ExperimentConfig& config);

struct ExperimentResult {
  std::vector<double> normalized_samples;  // ascending
  std::vector<double> ecdf;                // i/N at each sample
  std::vector<double> target_cdf;          // F(x_i)
  double ks = 0.0;
  std::string target_law;
  double runtime_seconds = 0.0;
  ExperimentConfig config_echo;
};

// Normalized statistic for one replicate, drawn from stream (seed, index).
double experiment_replicate(const ExperimentConfig& config, const PartitionSampler& sampler, std::uint64_t index);

ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config, const LimitLaw& law);

// Serialization. runtime_seconds is kept out of emitted files so that equal
// configurations produce byte-identical output.
std::string metadata_json(const ExperimentResult& result);
std::string result_json(const ExperimentResult& result);
ExperimentResult result_from_json(const std::string& text);
void write_result_csv(const ExperimentResult& result, std::ostream& out);

// Writes config_echo.output_path in its format. CSV output gets a sidecar
// <path>.meta.json with the metadata; bins > 0 adds <path>.bins.csv.
void emit(const ExperimentResult& result);

}  // namespace partlaw
