// Command-line front end: single runs, parameter sweeps, bound queries, and
// plot-ready series. Exit codes: 0 success, 2 invalid configuration or
// usage, 3 verification mismatch, 4 decode failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cwdc/analysis.hpp"
#include "cwdc/combinatorics.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/placement.hpp"
#include "cwdc/simulation.hpp"

namespace {

using namespace cwdc;

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_rat(const Rat& q) { return fmt_g(rat_to_double(q)); }

constexpr const char* kCsvHeader =
    "K,N,mu,mode,baseline,L_u_meas,L_d_meas,L_u_theory,L_d_theory,L_u_bound,L_d_bound,"
    "delta_meas,delta_theory,uplink_bits,downlink_bits,padding_bits,seed,"
    "downlink,value_bits,L_u_net,L_d_net,padding_up_bits,padding_down_bits,retries,"
    "messages,blocks,mu_frac,analytic,status";

std::string csv_row_simulated(const RunResult& r, const std::string& status) {
  const SystemConfig& c = r.valid.cfg;
  const LoadReport& lr = r.report;
  std::ostringstream s;
  s << c.users << ',' << c.files << ',' << fmt_rat(c.mu) << ',' << to_string(c.placement)
    << ',' << to_string(c.baseline) << ',' << fmt_rat(lr.load_up) << ','
    << fmt_rat(lr.load_down) << ',' << fmt_rat(lr.theory_up) << ',' << fmt_rat(lr.theory_down)
    << ',' << fmt_rat(lr.bound_up) << ',' << fmt_rat(lr.bound_down) << ','
    << fmt_rat(lr.delta_measured) << ',' << fmt_rat(lr.delta_theory) << ','
    << lr.counters.up_bits << ',' << lr.counters.down_bits << ','
    << lr.padding_up_bits + lr.padding_down_bits << ',' << c.seed << ','
    << to_string(c.downlink) << ',' << c.value_bits << ',' << fmt_rat(lr.load_up_net) << ','
    << fmt_rat(lr.load_down_net) << ',' << lr.padding_up_bits << ',' << lr.padding_down_bits
    << ',' << lr.counters.retries << ',' << lr.counters.up_messages << ','
    << lr.counters.down_blocks << ',' << rat_to_string(c.mu) << ",0," << status;
  return s.str();
}

std::string csv_row_analytic(int users, const Rat& mu, PlacementMode mode, Baseline baseline) {
  Rat theory_up, theory_down, delta(0), bound_up, bound_down;
  if (mode == PlacementMode::centralized) {
    if (baseline == Baseline::uncoded) {
      theory_up = uncoded_load_centralized(users, mu);
      theory_down = theory_up;
    } else {
      TheoryLoads t = theory_centralized(users, mu);
      theory_up = t.up;
      theory_down = t.down;
    }
    TheoryLoads b = lower_bound_envelope(users, mu);
    bound_up = b.up;
    bound_down = b.down;
  } else {
    DecentralizedTheory t = theory_decentralized(users, mu);
    delta = t.delta;
    if (baseline == Baseline::uncoded) {
      theory_up = uncoded_load_decentralized(users, mu);
      theory_down = theory_up;
    } else {
      theory_up = t.up;
      theory_down = t.down;
    }
    TheoryLoads b = decentralized_bound(users, mu, t.delta);
    bound_up = b.up;
    bound_down = b.down;
  }
  std::ostringstream s;
  s << users << ",,";
  s << fmt_rat(mu) << ',' << to_string(mode) << ',' << to_string(baseline) << ",,,"
    << fmt_rat(theory_up) << ',' << fmt_rat(theory_down) << ',' << fmt_rat(bound_up) << ','
    << fmt_rat(bound_down) << ",," << fmt_rat(delta) << ",,,,,,,,,,,,,,"
    << rat_to_string(mu) << ",1,ok";
  return s.str();
}

void print_run(std::ostream& out, const RunResult& r) {
  const SystemConfig& c = r.valid.cfg;
  const LoadReport& lr = r.report;
  out << "run: users=" << c.users << " files=" << c.files << " mu=" << rat_to_string(c.mu)
      << " T=" << c.value_bits << " seed=" << c.seed << " mode=" << to_string(c.placement)
      << " downlink=" << to_string(c.downlink) << " baseline=" << to_string(c.baseline)
      << '\n';
  if (c.placement == PlacementMode::centralized) {
    out << "placement:";
    for (const auto& comp : r.placement.components)
      out << " [replication=" << comp.replication << " batches=" << comp.batch_count
          << " eta=" << comp.eta << ']';
    out << " storage/user=" << r.valid.storage_files << '\n';
  } else {
    out << "placement: decentralized storage/user=" << r.valid.storage_files
        << (r.valid.storage_floored ? " (floored)" : "") << " lost=" << r.lost << '\n';
  }
  out << "shuffle: messages=" << lr.counters.up_messages << " uplink_bits="
      << lr.counters.up_bits << " blocks=" << lr.counters.down_blocks
      << " downlink_bits=" << lr.counters.down_bits << " retries=" << lr.counters.retries
      << '\n';
  out << "padding: up=" << lr.padding_up_bits << " down=" << lr.padding_down_bits << '\n';
  out << "loads: L_u = " << fmt_rat(lr.load_up) << "  L_d = " << fmt_rat(lr.load_down)
      << "  (exact " << rat_to_string(lr.load_up) << ", " << rat_to_string(lr.load_down)
      << ")\n";
  out << "net:   L_u = " << fmt_rat(lr.load_up_net) << "  L_d = " << fmt_rat(lr.load_down_net)
      << '\n';
  out << "theory: L_u = " << fmt_rat(lr.theory_up) << "  L_d = " << fmt_rat(lr.theory_down)
      << "  delta = " << fmt_rat(lr.delta_theory) << '\n';
  out << "bounds: L_u >= " << fmt_rat(lr.bound_up) << "  L_d >= " << fmt_rat(lr.bound_down)
      << '\n';
  if (lr.has_histogram_bounds)
    out << "histogram bounds: L_u >= " << fmt_rat(lr.hist_bound_up)
        << "  L_d >= " << fmt_rat(lr.hist_bound_down) << '\n';
  out << "verify: " << r.users_ok << '/' << c.users << " users match oracle\n";
  out << "time: " << fmt_g(r.seconds) << "s  hash=" << r.hash_id << "  field=" << r.field_id
      << '\n';
}

std::vector<Rat> parse_mu_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_ratio(item));
  }
  if (out.empty()) throw SimError(ErrorCode::BadInput, "empty mu list");
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw SimError(ErrorCode::BadInput, "empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw SimError(ErrorCode::BadInput, "empty list");
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw SimError(ErrorCode::BadInput, "cannot write " + path);
  return f;
}

struct CommonFlags {
  std::string mu_text = "1/2";
  std::string config_path;
  std::string mode = "centralized";
  std::string downlink = "mds";
  std::string baseline = "coded";
  SystemConfig cfg;

  void attach(CLI::App* app, bool with_files) {
    app->add_option("--users,-K", cfg.users, "number of users K");
    if (with_files) app->add_option("--files,-N", cfg.files, "number of files N");
    app->add_option("--mu", mu_text, "storage fraction, fraction p/q or decimal");
    app->add_option("--value-bits,-T", cfg.value_bits, "intermediate value bits");
    app->add_option("--file-bits", cfg.file_bits, "synthetic file payload bits");
    app->add_option("--input-bits", cfg.input_bits, "per-user input bits");
    app->add_option("--output-bits", cfg.output_bits, "reduce output bits");
    app->add_option("--seed", cfg.seed, "run seed");
    app->add_option("--mode", mode, "placement: centralized|decentralized");
    app->add_option("--downlink", downlink, "downlink coding: mds|random|forward");
    app->add_option("--baseline", baseline, "scheme: coded|uncoded");
    app->add_option("--retry-limit", cfg.retry_limit, "random matrix resample cap");
    app->add_option("--config", config_path, "key=value config file, flags override");
  }

  SystemConfig resolve(const CLI::App* app) {
    SystemConfig out;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw SimError(ErrorCode::BadInput, "cannot read config " + config_path);
      out = load_config_file(f);
    }
    // flags set on the command line override file values
    auto set = [&](const char* name) { return app->count(name) > 0; };
    if (set("--users") || config_path.empty()) out.users = cfg.users;
    if (set("--files") || config_path.empty()) out.files = cfg.files;
    if (set("--mu") || config_path.empty()) out.mu = parse_ratio(mu_text);
    if (set("--value-bits") || config_path.empty()) out.value_bits = cfg.value_bits;
    if (set("--file-bits") || config_path.empty()) out.file_bits = cfg.file_bits;
    if (set("--input-bits") || config_path.empty()) out.input_bits = cfg.input_bits;
    if (set("--output-bits") || config_path.empty()) out.output_bits = cfg.output_bits;
    if (set("--seed") || config_path.empty()) out.seed = cfg.seed;
    if (set("--mode") || config_path.empty()) out.placement = placement_mode_from(mode);
    if (set("--downlink") || config_path.empty()) out.downlink = downlink_mode_from(downlink);
    if (set("--baseline") || config_path.empty()) out.baseline = baseline_from(baseline);
    if (set("--retry-limit") || config_path.empty()) out.retry_limit = cfg.retry_limit;
    return out;
  }
};

int cmd_run(const SystemConfig& cfg, const std::string& out_csv, const RunOptions& opt) {
  RunResult r = run_simulation(cfg, opt);
  print_run(std::cout, r);
  if (!out_csv.empty()) {
    auto f = open_out(out_csv);
    f << kCsvHeader << '\n'
      << csv_row_simulated(r, r.verified ? "ok" : "verify_failed") << '\n';
  }
  return r.verified ? 0 : 3;
}

int cmd_sweep(int users, std::int64_t files, const std::vector<Rat>& mus,
              const std::vector<PlacementMode>& modes, const std::vector<Baseline>& baselines,
              DownlinkMode downlink, std::uint64_t seed, bool analytic_only, int sim_limit,
              const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file = open_out(out_path);
    out = &file;
  }
  *out << kCsvHeader << '\n';
  bool all_verified = true;
  for (const Rat& mu : mus) {
    for (PlacementMode mode : modes) {
      for (Baseline baseline : baselines) {
        bool simulate = !analytic_only && users <= sim_limit;
        if (simulate) {
          SystemConfig cfg;
          cfg.users = users;
          cfg.mu = mu;
          cfg.placement = mode;
          cfg.baseline = baseline;
          cfg.downlink = downlink;
          cfg.seed = seed;
          cfg.files = files > 0 ? files
                     : mode == PlacementMode::centralized ? suggest_files(users, mu, 1)
                                                          : 2000;
          try {
            RunResult r = run_simulation(cfg);
            if (!r.verified) all_verified = false;
            *out << csv_row_simulated(r, r.verified ? "ok" : "verify_failed") << '\n';
            continue;
          } catch (const SimError& e) {
            if (e.code() != ErrorCode::DivisibilityViolation) throw;
            // fall through to the analytic row when N does not fit (K, mu)
          }
        }
        *out << csv_row_analytic(users, mu, mode, baseline) << '\n';
      }
    }
  }
  return all_verified ? 0 : 3;
}

int cmd_bounds(int users, const Rat& mu, const std::string& placement_path,
               std::int64_t files, const std::string& delta_text) {
  TheoryLoads env = lower_bound_envelope(users, mu);
  std::cout << "envelope: L_u >= " << fmt_rat(env.up) << "  L_d >= " << fmt_rat(env.down)
            << "  (exact " << rat_to_string(env.up) << ", " << rat_to_string(env.down) << ")\n";
  if (!delta_text.empty()) {
    Rat delta = parse_ratio(delta_text);
    TheoryLoads b = decentralized_bound(users, mu, delta);
    std::cout << "with delta=" << fmt_rat(delta) << ": L_u >= " << fmt_rat(b.up)
              << "  L_d >= " << fmt_rat(b.down) << '\n';
  }
  if (!placement_path.empty()) {
    std::ifstream f(placement_path);
    if (!f) throw SimError(ErrorCode::BadInput, "cannot read placement " + placement_path);
    Placement p = load_placement(f, PlacementMode::decentralized, files);
    if (p.users != users)
      throw SimError(ErrorCode::BadInput, "placement user count does not match --users");
    ReplicationHistogram h = replication_histogram(p);
    std::cout << "placement: files=" << p.files << " lost=" << h.count[0]
              << " loss=" << fmt_rat(information_loss(h)) << '\n';
    if (h.count[0] == 0) {
      std::cout << "histogram bounds: L_u >= " << fmt_rat(lower_bound_uplink(h))
                << "  L_d >= " << fmt_rat(lower_bound_downlink(h)) << '\n';
    } else {
      std::cout << "histogram bounds: unavailable, lost files present\n";
    }
  }
  return 0;
}

int cmd_figdata(const std::string& series, int users, const std::string& users_list,
                const Rat& mu, std::int64_t files, std::uint64_t seed,
                const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file = open_out(out_path);
    out = &file;
  }
  if (series == "centralized-tradeoff") {
    // coded uplink/downlink vs the uncoded load over the mu grid t/K
    *out << "mu,L_uncoded,L_coded_up,L_coded_down\n";
    for (int t = 1; t <= users; ++t) {
      Rat mu_t = make_rat(t, users);
      TheoryLoads c = theory_centralized(users, mu_t);
      *out << fmt_rat(mu_t) << ',' << fmt_rat(uncoded_load_centralized(users, mu_t)) << ','
           << fmt_rat(c.up) << ',' << fmt_rat(c.down) << '\n';
    }
    return 0;
  }
  if (series == "mode-compare") {
    *out << "mu,L_central_up,L_central_down,L_decent_up,L_decent_down,delta\n";
    for (int t = 1; t <= users; ++t) {
      Rat mu_t = make_rat(t, users);
      TheoryLoads c = theory_centralized(users, mu_t);
      DecentralizedTheory d = theory_decentralized(users, mu_t);
      *out << fmt_rat(mu_t) << ',' << fmt_rat(c.up) << ',' << fmt_rat(c.down) << ','
           << fmt_rat(d.up) << ',' << fmt_rat(d.down) << ',' << fmt_rat(d.delta) << '\n';
    }
    return 0;
  }
  if (series == "concentration") {
    *out << "K,j,empirical,binomial,tv\n";
    for (int k : parse_int_list(users_list)) {
      // density sampling only counts owners per file, so it is not subject
      // to the 64-user bit-level simulation cap
      std::int64_t storage = rat_floor(mu * files);
      ReplicationHistogram h = sample_replication_histogram(k, files, storage, seed);
      Concentration c = concentration_density({h}, mu);
      for (int j = 0; j <= k; ++j)
        *out << k << ',' << j << ',' << fmt_g(c.empirical[std::size_t(j)]) << ','
             << fmt_g(c.binomial[std::size_t(j)]) << ',' << fmt_g(c.tv) << '\n';
    }
    return 0;
  }
  throw SimError(ErrorCode::BadInput, "unknown series: " + series);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coded wireless distributed computing simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "simulate one configuration and report loads");
  CommonFlags rf;
  rf.cfg.users = 3;
  rf.cfg.files = 6;
  rf.mu_text = "2/3";
  rf.attach(run, true);
  std::string run_out, run_trace, run_dump;
  run->add_option("--out", run_out, "write the report as one CSV row");
  run->add_option("--trace", run_trace, "write message/block log as JSON lines");
  run->add_option("--dump-placement", run_dump, "write placement, one line per user");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid of runs, CSV per row");
  int sw_users = 4;
  std::int64_t sw_files = 0;
  std::string sw_mus = "1/4,1/2,3/4";
  std::string sw_modes = "centralized";
  std::string sw_baselines = "coded";
  std::string sw_downlink = "mds";
  std::uint64_t sw_seed = 1;
  bool sw_analytic = false;
  int sw_limit = 14;
  std::string sw_out;
  sweep->add_option("--users,-K", sw_users, "number of users K");
  sweep->add_option("--files,-N", sw_files, "files per run; 0 picks a valid default");
  sweep->add_option("--mu-list", sw_mus, "comma-separated storage fractions");
  sweep->add_option("--modes", sw_modes, "comma-separated placement modes");
  sweep->add_option("--baselines", sw_baselines, "comma-separated baselines");
  sweep->add_option("--downlink", sw_downlink, "downlink coding mode");
  sweep->add_option("--seed", sw_seed, "run seed");
  sweep->add_flag("--analytic-only", sw_analytic, "skip simulation, emit theory rows");
  sweep->add_option("--sim-limit", sw_limit, "largest K simulated bit-exactly");
  sweep->add_option("--out", sw_out, "CSV path, default stdout");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "lower bounds for (K, mu) or a placement");
  int bd_users = 4;
  std::string bd_mu = "1/2";
  std::string bd_placement;
  std::int64_t bd_files = 0;
  std::string bd_delta;
  bounds->add_option("--users,-K", bd_users, "number of users K");
  bounds->add_option("--mu", bd_mu, "storage fraction");
  bounds->add_option("--placement", bd_placement, "placement dump to bound");
  bounds->add_option("--files", bd_files, "total files when the dump omits unstored ones");
  bounds->add_option("--delta", bd_delta, "loss fraction for the delta-aware bound");

  // figdata
  auto* fig = app.add_subcommand("figdata", "plot-ready series as CSV");
  std::string fg_series = "centralized-tradeoff";
  int fg_users = 20;
  std::string fg_users_list = "8,16,32,64,128";
  std::string fg_mu = "2/5";
  std::int64_t fg_files = 100000;
  std::uint64_t fg_seed = 1;
  std::string fg_out;
  fig->add_option("--series", fg_series,
                  "centralized-tradeoff | mode-compare | concentration");
  fig->add_option("--users,-K", fg_users, "K for the tradeoff series");
  fig->add_option("--users-list", fg_users_list, "K grid for the concentration series");
  fig->add_option("--mu", fg_mu, "storage fraction for the concentration series");
  fig->add_option("--files,-N", fg_files, "files for the concentration series");
  fig->add_option("--seed", fg_seed, "placement seed");
  fig->add_option("--out", fg_out, "CSV path, default stdout");

  // suggest
  auto* sugg = app.add_subcommand("suggest", "nearest valid N for (K, mu)");
  int sg_users = 4;
  std::string sg_mu = "1/2";
  std::int64_t sg_near = 1;
  sugg->add_option("--users,-K", sg_users, "number of users K");
  sugg->add_option("--mu", sg_mu, "storage fraction");
  sugg->add_option("--near", sg_near, "smallest N to consider");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      RunOptions opt;
      opt.trace_path = run_trace;
      opt.placement_dump_path = run_dump;
      return cmd_run(rf.resolve(run), run_out, opt);
    }
    if (sweep->parsed()) {
      std::vector<PlacementMode> modes;
      for (auto& m : parse_string_list(sw_modes)) modes.push_back(placement_mode_from(m));
      std::vector<Baseline> baselines;
      for (auto& b : parse_string_list(sw_baselines)) baselines.push_back(baseline_from(b));
      return cmd_sweep(sw_users, sw_files, parse_mu_list(sw_mus), modes, baselines,
                       downlink_mode_from(sw_downlink), sw_seed, sw_analytic, sw_limit, sw_out);
    }
    if (bounds->parsed())
      return cmd_bounds(bd_users, parse_ratio(bd_mu), bd_placement, bd_files, bd_delta);
    if (fig->parsed())
      return cmd_figdata(fg_series, fg_users, fg_users_list, parse_ratio(fg_mu), fg_files,
                         fg_seed, fg_out);
    if (sugg->parsed()) {
      std::cout << suggest_files(sg_users, parse_ratio(sg_mu), sg_near) << '\n';
      return 0;
    }
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::DivisibilityViolation) {
      // append an actionable hint when N simply does not fit (K, mu)
      try {
        if (run->parsed()) {
          SystemConfig cfg = rf.resolve(run);
          std::cerr << "hint: nearest valid N is " << suggest_files(cfg.users, cfg.mu, cfg.files)
                    << '\n';
        }
      } catch (...) {
      }
    }
    if (e.is_config_error()) return 2;
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
