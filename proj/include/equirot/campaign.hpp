#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equirot/su2.hpp"
#include "equirot/types.hpp"

namespace equirot {

enum class CampaignCommand { onesided, twosided, circle, channel, ghz, swap, dxd };

enum class ReportFormat { json, csv_row };

// Operator input: a fixed element or a fresh Haar draw per sample.
struct OperatorSpec {
  bool haar = true;
  SU2Element fixed;
};

struct CampaignConfig {
  CampaignCommand command = CampaignCommand::onesided;
  double l0 = 0.7071067811865476;
  double l1 = 0.7071067811865476;
  OperatorSpec w1;
  OperatorSpec w2;
  std::string channel_kind = "depolarizing";
  double p = 0.5;
  int dim = 3;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = kPredicateTol;
  bool constrained = false;
  ReportFormat format = ReportFormat::json;
};

// Report fields, serialized in exactly this order.
struct CampaignReport {
  std::string command;
  // Resolved inputs; values are rendered JSON fragments.
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t n_samples = 0;
  std::uint64_t n_pass = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;
  std::string library_version;
};

// Runs the configured campaign. Samples are processed in fixed-size shards
// with per-shard random substreams keyed by (seed, shard index); the worker
// count (EQUIROT_WORKERS, defaulting to the hardware concurrency) only
// affects wall time, never the counts or residuals.
CampaignReport run_campaign(const CampaignConfig& cfg);

std::string emit_report(const CampaignReport& report, ReportFormat format);

std::string command_name(CampaignCommand cmd);

}  // namespace equirot
