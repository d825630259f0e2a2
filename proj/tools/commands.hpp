#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace infoloss::cli {

/// Bad flag combinations and other command-line misuse; exits with code 4.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EntropyOptions {
  std::string space_file;
  double order = 1.0;
  bool bits = false;
};

struct LossOptions {
  std::string map_file;
  double order = 1.0;
  double constant = 1.0;
  std::string method = "difference";  // difference | conditional | both
  bool infer_codomain = false;
};

struct PipelineOptions {
  std::string pipeline_file;
  double order = 1.0;
  bool infer_codomain = false;
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  int trials = 1000;
  int max_points = 8;
  int denominator_bound = 1000;
  std::vector<double> orders;  // default {0.5, 1, 2, 3}
  double constant = 1.0;
  std::string inject;  // "" or "squared"
  bool json = false;
  bool phi_diagnostic = false;
};

int run_entropy(const EntropyOptions& opts);
int run_loss(const LossOptions& opts);
int run_pipeline(const PipelineOptions& opts);
int run_verify(const VerifyOptions& opts);

}  // namespace infoloss::cli
