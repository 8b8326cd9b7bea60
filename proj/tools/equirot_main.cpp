#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "equirot/bipartite.hpp"
#include "equirot/campaign.hpp"

namespace {

using equirot::CampaignCommand;
using equirot::CampaignConfig;
using equirot::ConfigError;
using equirot::OperatorSpec;
using equirot::SU2Element;
using equirot::Vec3;

OperatorSpec parse_operator(const std::string& text) {
  OperatorSpec spec;
  spec.haar = false;
  if (text.rfind("preset:", 0) == 0) {
    std::string name = text.substr(7);
    if (name == "not") {
      spec.fixed = equirot::su2_pi_about(Vec3(1.0, 1.0, 0.0));
    } else if (name == "sx") {
      spec.fixed = equirot::su2_pi_about(Vec3::UnitX());
    } else if (name == "sy") {
      spec.fixed = equirot::su2_pi_about(Vec3::UnitY());
    } else if (name == "sz") {
      spec.fixed = equirot::su2_pi_about(Vec3::UnitZ());
    } else if (name == "id") {
      spec.fixed = equirot::su2_identity();
    } else {
      throw ConfigError("unknown operator preset: " + name);
    }
    return spec;
  }
  std::istringstream in(text);
  double q[4];
  char sep = ',';
  for (int i = 0; i < 4; ++i) {
    if (i > 0 && (!(in >> sep) || sep != ',')) {
      throw ConfigError("operator must be r0,rx,ry,rz or preset:<name>");
    }
    if (!(in >> q[i])) {
      throw ConfigError("operator must be r0,rx,ry,rz or preset:<name>");
    }
  }
  if (in >> sep) {
    throw ConfigError("operator has trailing characters");
  }
  double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ConfigError("operator quaternion must be normalized within 1e-6");
  }
  spec.fixed = equirot::su2_normalized(q[0], Vec3(q[1], q[2], q[3]));
  return spec;
}

struct CliOptions {
  double l0 = -1.0;
  double l1 = -1.0;
  std::string w1;
  std::string w2;
  std::string kind = "depolarizing";
  double p = 0.5;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = equirot::kPredicateTol;
  bool constrained = false;
  int dim = 3;
  std::string format = "json";
  std::string out;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--l0", opt.l0, "Larger Schmidt coefficient");
  cmd->add_option("--l1", opt.l1, "Smaller Schmidt coefficient");
  cmd->add_option("--w1", opt.w1, "First operator: r0,rx,ry,rz or preset:<name>");
  cmd->add_option("--w2", opt.w2, "Second operator: r0,rx,ry,rz or preset:<name>");
  cmd->add_option("--kind", opt.kind, "Channel kind: depolarizing or bitflip");
  cmd->add_option("--p", opt.p, "Channel probability");
  cmd->add_option("--samples", opt.samples, "Number of Monte Carlo samples");
  cmd->add_option("--seed", opt.seed, "Random seed");
  cmd->add_option("--tol", opt.tol, "Pass tolerance for residuals");
  cmd->add_flag("--constrained", opt.constrained,
                "Draw from the constructive solution family");
  cmd->add_option("--dim", opt.dim, "Local dimension for dxd");
  cmd->add_option("--format", opt.format, "Report format: json or csv-row");
  cmd->add_option("--out", opt.out, "Write the report to this path");
}

CampaignConfig build_config(CampaignCommand command, const CliOptions& opt) {
  CampaignConfig cfg;
  cfg.command = command;
  if (opt.l0 >= 0.0 && opt.l1 >= 0.0) {
    cfg.l0 = opt.l0;
    cfg.l1 = opt.l1;
  } else if (opt.l0 >= 0.0) {
    if (opt.l0 > 1.0) {
      throw ConfigError("l0 must lie in [0, 1]");
    }
    cfg.l0 = opt.l0;
    cfg.l1 = std::sqrt(std::max(1.0 - opt.l0 * opt.l0, 0.0));
  } else if (opt.l1 >= 0.0) {
    throw ConfigError("l1 requires l0");
  }
  if (!opt.w1.empty()) {
    cfg.w1 = parse_operator(opt.w1);
  }
  if (!opt.w2.empty()) {
    cfg.w2 = parse_operator(opt.w2);
  }
  cfg.channel_kind = opt.kind;
  cfg.p = opt.p;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.tol = opt.tol;
  cfg.constrained = opt.constrained;
  cfg.dim = opt.dim;
  if (opt.format == "json") {
    cfg.format = equirot::ReportFormat::json;
  } else if (opt.format == "csv-row") {
    cfg.format = equirot::ReportFormat::csv_row;
  } else {
    throw ConfigError("format must be json or csv-row");
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo checks of equal-rotation conditions for entangled states"};
  app.require_subcommand(1);

  CliOptions opt;
  struct Entry {
    const char* name;
    CampaignCommand command;
    const char* help;
  };
  const Entry entries[] = {
      {"onesided", CampaignCommand::onesided,
       "Overlap constancy under one-sided local unitaries"},
      {"twosided", CampaignCommand::twosided,
       "Overlap constancy under two-sided local unitaries"},
      {"circle", CampaignCommand::circle,
       "Equal-overlap circle states and their superpositions"},
      {"channel", CampaignCommand::channel,
       "Fidelity constancy under one-sided unital channels"},
      {"ghz", CampaignCommand::ghz, "GHZ orbit rotation amounts"},
      {"swap", CampaignCommand::swap, "Swap-operator rotation amounts"},
      {"dxd", CampaignCommand::dxd, "d x d equally entangled states"},
  };
  for (const auto& e : entries) {
    add_common_options(app.add_subcommand(e.name, e.help), opt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Entry* chosen = nullptr;
    for (const auto& e : entries) {
      if (app.get_subcommand(e.name)->parsed()) {
        chosen = &e;
        break;
      }
    }
    if (chosen == nullptr) {
      throw ConfigError("no command given");
    }
    CampaignConfig cfg = build_config(chosen->command, opt);
    equirot::CampaignReport report = equirot::run_campaign(cfg);
    std::string rendered = equirot::emit_report(report, cfg.format);
    if (opt.out.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file || !(file << rendered) || !file.flush()) {
        throw equirot::IoError("cannot write report to " + opt.out);
      }
    }
    return report.n_pass == report.n_samples ? 0 : 3;
  } catch (const equirot::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const equirot::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
