#include "equirot/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include <json.hpp>

#include "equirot/bipartite.hpp"
#include "equirot/channels.hpp"
#include "equirot/multiparty.hpp"
#include "equirot/rotation_conditions.hpp"
#include "equirot/version.hpp"

namespace equirot {

namespace {

constexpr std::uint64_t kShardSize = 1024;

unsigned resolve_workers() {
  if (const char* env = std::getenv("EQUIROT_WORKERS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
      throw ConfigError("EQUIROT_WORKERS must be a positive integer");
    }
    return static_cast<unsigned>(value);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

SU2Element resolve_operator(const OperatorSpec& spec, RandomStream& rng) {
  return spec.haar ? haar_su2(rng) : spec.fixed;
}

EulerSU2 random_euler(RandomStream& rng) {
  return {rng.uniform(0.0, 2.0 * M_PI), rng.uniform(0.0, 2.0 * M_PI),
          rng.uniform(0.0, 2.0 * M_PI)};
}

MatX random_diagonal_special(int d, RandomStream& rng) {
  Eigen::VectorXcd diag(d);
  double total = 0.0;
  for (int i = 0; i + 1 < d; ++i) {
    double theta = rng.uniform(0.0, 2.0 * M_PI);
    total += theta;
    diag(i) = std::exp(Complex(0.0, theta));
  }
  diag(d - 1) = std::exp(Complex(0.0, -total));
  return diag.asDiagonal();
}

Eigen::VectorXd random_descending_schmidt(int d, RandomStream& rng) {
  Eigen::VectorXd vals(d);
  for (int i = 0; i < d; ++i) {
    vals(i) = std::abs(rng.gaussian()) + 0.1;
  }
  vals /= vals.norm();
  std::sort(vals.data(), vals.data() + d, std::greater<double>());
  return vals;
}

using Kernel = std::function<double(RandomStream&)>;

Kernel make_kernel(const CampaignConfig& cfg) {
  double l0 = cfg.l0;
  double l1 = cfg.l1;
  switch (cfg.command) {
    case CampaignCommand::onesided:
      return [cfg, l0, l1](RandomStream& rng) {
        SU2Element w1 = resolve_operator(cfg.w1, rng);
        SU2Element u = cfg.constrained ? sample_one_sided_set(w1, rng) : haar_su2(rng);
        SU2Element v = haar_su2(rng);
        PureState2Q s = apply_local(u, v, make_psi0(l0, l1));
        Mat4 op = kron(su2_to_matrix(w1), Mat2::Identity());
        return std::abs(overlap(s, op) - one_sided_amount(w1, l0, l1));
      };
    case CampaignCommand::twosided:
      return [cfg, l0, l1](RandomStream& rng) {
        SU2Element w1 = resolve_operator(cfg.w1, rng);
        SU2Element w2 = resolve_operator(cfg.w2, rng);
        LocalPair pair = cfg.constrained
                             ? sample_two_sided_set(w1, w2, l0, l1, rng)
                             : LocalPair{haar_su2(rng), haar_su2(rng)};
        return two_sided_condition(pair.u, pair.v, w1, w2, l0, l1).value;
      };
    case CampaignCommand::circle:
      return [cfg](RandomStream& rng) {
        SU2Element w1 = resolve_operator(cfg.w1, rng);
        double lambda = rng.uniform();
        CirclePoint p1 = sample_circle_state(w1, rng);
        CirclePoint p2 = sample_circle_state(w1, rng);
        Mat2 basis = su2_to_matrix(haar_su2(rng));
        PureState2Q chi = build_chi(lambda, p1.state.ket, p2.state.ket,
                                    basis.col(0), basis.col(1), w1);
        Mat4 op = kron(su2_to_matrix(w1), Mat2::Identity());
        return std::abs(overlap(chi, op) - Complex(w1.r0, w1.rvec.z()));
      };
    case CampaignCommand::channel: {
      UnitalQubitChannel ch = cfg.channel_kind == "bitflip"
                                  ? bitflip_channel(cfg.p)
                                  : depolarizing_channel(cfg.p);
      double baseline =
          one_sided_channel_fidelity(ch, su2_identity(), su2_identity(), l0, l1);
      bool constrain_axis = cfg.constrained && cfg.channel_kind == "bitflip";
      return [ch, baseline, constrain_axis, l0, l1](RandomStream& rng) {
        SU2Element u = constrain_axis
                           ? sample_one_sided_set(su2_pi_about(Vec3::UnitX()), rng)
                           : haar_su2(rng);
        SU2Element v = haar_su2(rng);
        return std::abs(one_sided_channel_fidelity(ch, u, v, l0, l1) - baseline);
      };
    }
    case CampaignCommand::ghz:
      return [](RandomStream& rng) {
        EulerSU2 e1 = random_euler(rng);
        EulerSU2 e2 = random_euler(rng);
        EulerSU2 e3 = random_euler(rng);
        EulerSU2 rot = random_euler(rng);
        double phase = rng.uniform(0.0, 2.0 * M_PI);
        return verify_ghz_invariance(e1, e2, e3, rot, phase).value;
      };
    case CampaignCommand::swap:
      return [cfg, l0, l1](RandomStream& rng) {
        LocalPair pair = cfg.constrained ? sample_swap_matched(rng)
                                         : LocalPair{haar_su2(rng), haar_su2(rng)};
        Complex expected = std::exp(Complex(0.0, M_PI / 4.0));
        return std::abs(swap_amount(pair.u, pair.v, l0, l1) - expected);
      };
    case CampaignCommand::dxd:
      return [cfg](RandomStream& rng) {
        int d = cfg.dim;
        MatX eye = MatX::Identity(d, d);
        if (cfg.constrained) {
          MatX w1 = random_diagonal_special(d, rng);
          MatX u = random_diagonal_special(d, rng);
          MatX v = haar_unitary(d, rng);
          Eigen::VectorXd dvals = random_descending_schmidt(d, rng);
          return dxd_condition(w1, eye, u, v, dvals).value;
        }
        MatX w1 = haar_unitary(d, rng);
        MatX u = haar_unitary(d, rng);
        MatX v = haar_unitary(d, rng);
        Eigen::VectorXd dvals =
            Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
        return dxd_condition(w1, eye, u, v, dvals).value;
      };
  }
  throw ConfigError("unknown command");
}

std::string render_number(double v) { return nlohmann::json(v).dump(); }

std::string render_operator(const OperatorSpec& spec) {
  if (spec.haar) {
    return "\"haar\"";
  }
  nlohmann::json arr = {spec.fixed.r0, spec.fixed.rvec.x(), spec.fixed.rvec.y(),
                        spec.fixed.rvec.z()};
  return arr.dump();
}

std::vector<std::pair<std::string, std::string>> echo_params(const CampaignConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add_bool = [&](const char* k, bool v) { out.emplace_back(k, v ? "true" : "false"); };
  switch (cfg.command) {
    case CampaignCommand::onesided:
      out.emplace_back("l0", render_number(cfg.l0));
      out.emplace_back("l1", render_number(cfg.l1));
      out.emplace_back("w1", render_operator(cfg.w1));
      add_bool("constrained", cfg.constrained);
      break;
    case CampaignCommand::twosided:
      out.emplace_back("l0", render_number(cfg.l0));
      out.emplace_back("l1", render_number(cfg.l1));
      out.emplace_back("w1", render_operator(cfg.w1));
      out.emplace_back("w2", render_operator(cfg.w2));
      add_bool("constrained", cfg.constrained);
      break;
    case CampaignCommand::circle:
      out.emplace_back("w1", render_operator(cfg.w1));
      break;
    case CampaignCommand::channel:
      out.emplace_back("kind", "\"" + cfg.channel_kind + "\"");
      out.emplace_back("p", render_number(cfg.p));
      out.emplace_back("l0", render_number(cfg.l0));
      out.emplace_back("l1", render_number(cfg.l1));
      add_bool("constrained", cfg.constrained);
      break;
    case CampaignCommand::ghz:
      break;
    case CampaignCommand::swap:
      out.emplace_back("l0", render_number(cfg.l0));
      out.emplace_back("l1", render_number(cfg.l1));
      add_bool("constrained", cfg.constrained);
      break;
    case CampaignCommand::dxd:
      out.emplace_back("dim", std::to_string(cfg.dim));
      add_bool("constrained", cfg.constrained);
      break;
  }
  out.emplace_back("tol", render_number(cfg.tol));
  return out;
}

void validate(const CampaignConfig& cfg) {
  if (cfg.samples < 1) {
    throw ConfigError("samples must be at least 1");
  }
  if (!(cfg.tol > 0.0)) {
    throw ConfigError("tol must be positive");
  }
  if (cfg.command == CampaignCommand::dxd && (cfg.dim < 2 || cfg.dim > 8)) {
    throw ConfigError("dim must lie in [2, 8]");
  }
  if (cfg.command == CampaignCommand::channel && cfg.channel_kind != "depolarizing" &&
      cfg.channel_kind != "bitflip") {
    throw ConfigError("channel kind must be depolarizing or bitflip");
  }
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    throw ConfigError("p must lie in [0, 1]");
  }
  make_psi0(cfg.l0, cfg.l1);
}

struct ShardResult {
  std::uint64_t n_pass = 0;
  double max_residual = 0.0;
  double sum_residual = 0.0;
};

}  // namespace

std::string command_name(CampaignCommand cmd) {
  switch (cmd) {
    case CampaignCommand::onesided: return "onesided";
    case CampaignCommand::twosided: return "twosided";
    case CampaignCommand::circle: return "circle";
    case CampaignCommand::channel: return "channel";
    case CampaignCommand::ghz: return "ghz";
    case CampaignCommand::swap: return "swap";
    case CampaignCommand::dxd: return "dxd";
  }
  return "unknown";
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  auto start = std::chrono::steady_clock::now();
  Kernel kernel = make_kernel(cfg);

  std::uint64_t n_shards = (cfg.samples + kShardSize - 1) / kShardSize;
  std::vector<ShardResult> shards(n_shards);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::uint64_t k = next.fetch_add(1);
      if (k >= n_shards) {
        return;
      }
      RandomStream rng = RandomStream::for_shard(cfg.seed, k);
      std::uint64_t count =
          std::min(kShardSize, cfg.samples - k * kShardSize);
      ShardResult res;
      for (std::uint64_t i = 0; i < count; ++i) {
        double r = kernel(rng);
        res.sum_residual += r;
        res.max_residual = std::max(res.max_residual, r);
        if (r <= cfg.tol) {
          ++res.n_pass;
        }
      }
      shards[k] = res;
    }
  };

  unsigned n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(), n_shards));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_workers; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }

  CampaignReport report;
  report.command = command_name(cfg.command);
  report.params = echo_params(cfg);
  report.n_samples = cfg.samples;
  report.seed = cfg.seed;
  report.library_version = kLibraryVersion;
  double sum = 0.0;
  for (const auto& s : shards) {
    report.n_pass += s.n_pass;
    report.max_residual = std::max(report.max_residual, s.max_residual);
    sum += s.sum_residual;
  }
  report.mean_residual = sum / static_cast<double>(cfg.samples);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_report(const CampaignReport& report, ReportFormat format) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, fragment] : report.params) {
    params[key] = nlohmann::ordered_json::parse(fragment);
  }
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["params"] = params;
    j["n_samples"] = report.n_samples;
    j["n_pass"] = report.n_pass;
    j["max_residual"] = report.max_residual;
    j["mean_residual"] = report.mean_residual;
    j["seed"] = report.seed;
    j["wall_time_ms"] = report.wall_time_ms;
    j["library_version"] = report.library_version;
    return j.dump() + "\n";
  }
  std::string header =
      "command,params,n_samples,n_pass,max_residual,mean_residual,seed,"
      "wall_time_ms,library_version";
  std::string row = report.command;
  row += "," + csv_quote(params.dump());
  row += "," + std::to_string(report.n_samples);
  row += "," + std::to_string(report.n_pass);
  row += "," + render_number(report.max_residual);
  row += "," + render_number(report.mean_residual);
  row += "," + std::to_string(report.seed);
  row += "," + render_number(report.wall_time_ms);
  row += "," + report.library_version;
  return header + "\n" + row + "\n";
}

}  // namespace equirot
