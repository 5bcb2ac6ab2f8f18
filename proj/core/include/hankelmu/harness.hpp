#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hankelmu/analytic.hpp"
#include "hankelmu/measures.hpp"
#include "hankelmu/weights.hpp"

namespace hankelmu {

struct ExperimentConfig {
  std::string experiment;
  nlohmann::json measure;
  nlohmann::json weight;
  nlohmann::json function;
  double p = 2.0;
  std::vector<int> sizes;  // N ladder or J ladder, experiment-dependent
  double tol = 1e-9;
  double s = 1.0;      // carleson experiment
  double alpha = 0.0;  // carleson experiment
  int n_max = 64;      // moments experiment
  nlohmann::json raw;  // config echo for provenance
};

/// Parses and schema-validates a config; throws ConfigError on violations.
ExperimentConfig parse_config(const nlohmann::json& j);

Measure measure_from_json(const nlohmann::json& j);
Weight weight_from_json(const nlohmann::json& j);
TaylorFunction function_from_json(const nlohmann::json& j, double p,
                                  const Weight& w, std::size_t degree);

struct VerificationReport {
  std::string experiment;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> verdicts;  // ordered
  nlohmann::ordered_json provenance;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
  std::string verdict(const std::string& key) const;
};

/// Named coefficient generator from the frozen corpus.
struct CorpusGenerator {
  std::string name;
  CoefficientGenerator gen;
  bool nonincreasing;
};

/// The frozen test corpus; the extremal generator depends on (p, omega).
std::vector<CorpusGenerator> corpus_generators(double p, const Weight& w);

/// FNV-1a hash of the corpus manifest, recorded in every provenance block.
std::string corpus_manifest_hash();
extern const char* const kToolVersion;

VerificationReport run_thdec(const ExperimentConfig& cfg);
VerificationReport run_lemmom(const ExperimentConfig& cfg);
VerificationReport run_thhlao(const ExperimentConfig& cfg);
VerificationReport run_logcond(const ExperimentConfig& cfg);
VerificationReport run_widom(const ExperimentConfig& cfg);
VerificationReport run_admissible(const ExperimentConfig& cfg);
VerificationReport run_moments(const ExperimentConfig& cfg);
VerificationReport run_carleson(const ExperimentConfig& cfg);
VerificationReport run_apply(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment.
VerificationReport run_experiment(const ExperimentConfig& cfg);

}  // namespace hankelmu
