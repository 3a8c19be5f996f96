#include "coopbf/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "coopbf/error.hpp"
#include "coopbf/rng.hpp"

namespace coopbf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v, int digits = 10) {
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += num(values[i], 12);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

double to_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    fail(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t to_unsigned(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::InvalidArgument, "not a nonnegative integer: '" + std::string(text) + "'");
  }
  return v;
}

bool to_bool(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "0" || text == "false" || text == "no" || text == "off") {
    return false;
  }
  fail(ErrorCode::InvalidArgument, "not a boolean: '" + std::string(text) + "'");
}

// Grid values are snapped to 1e-9 so that lo + i*step prints cleanly.
double snap(double v) { return std::round(v * 1e9) / 1e9; }

std::string series_name(double alpha) { return "alpha=" + num(alpha, 6); }

OutageConfig outage_config(const ExperimentConfig& cfg, std::size_t k, double p2, double sigma_n2) {
  OutageConfig oc;
  oc.r_tr = cfg.r_tr;
  oc.p2 = p2;
  oc.sigma_n2 = sigma_n2;
  oc.m = cfg.m;
  oc.k = k;
  oc.trials = cfg.trials;
  oc.seed = cfg.seed;
  oc.gain_mode = cfg.gain_mode;
  oc.workers = cfg.workers;
  return oc;
}

AlphaSearch alpha_search(const ExperimentConfig& cfg, double sigma_n2) {
  AlphaSearch s;
  s.grid = cfg.alpha_grid;
  s.p_total = cfg.p_total();
  s.broadcast = cfg.broadcast();
  s.m = cfg.m;
  s.r_tr = cfg.r_tr;
  s.sigma_n2 = sigma_n2;
  s.trials = cfg.trials;
  s.seed = cfg.seed;
  s.gain_mode = cfg.gain_mode;
  s.workers = cfg.workers;
  return s;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RunManifest base_manifest(const ExperimentConfig& cfg) {
  RunManifest man;
  man.software_version = software_version();
  man.master_seed = cfg.seed;
  man.seed_rule = substream_rule();
  auto& c = man.config;
  c.emplace_back("experiment", to_string(cfg.experiment));
  c.emplace_back("m", std::to_string(cfg.m));
  c.emplace_back("ratio-ptotal-ps", num(cfg.ratio_ptotal_ps, 17));
  c.emplace_back("ps", num(cfg.p_s, 17));
  c.emplace_back("p_total", num(cfg.p_total(), 17));
  c.emplace_back("rbr", num(cfg.r_br, 17));
  c.emplace_back("sigma-nbr2", num(cfg.sigma_nbr2, 17));
  c.emplace_back("rtr", num(cfg.r_tr, 17));
  c.emplace_back("alpha", join(cfg.alpha_grid));
  c.emplace_back("snr-db", join(cfg.snr_db_grid));
  if (cfg.experiment == Experiment::CorrSweep) {
    c.emplace_back("corr", join(cfg.corr_r_grid));
  }
  c.emplace_back("trials", std::to_string(cfg.trials));
  c.emplace_back("seed", std::to_string(cfg.seed));
  c.emplace_back("gain-mode", to_string(cfg.gain_mode));
  c.emplace_back("bound-variant", to_string(cfg.bound_variant));
  if (cfg.experiment == Experiment::SnrSweep) {
    c.emplace_back("baseline", cfg.baseline ? "true" : "false");
    c.emplace_back("mimo-antennas", std::to_string(cfg.mimo_antennas));
  }
  c.emplace_back("snr_axis", "P_total/sigma_n2 in dB; sigma_n2 = P_total / 10^(snr_db/10)");
  return man;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void append_estimate(std::ostringstream& os, const std::optional<OutageEstimate>& est, std::uint64_t trials) {
  if (est) {
    os << est->trials << ',' << est->outages << ',' << num(est->probability) << ',' << num(est->std_error);
  } else {
    os << trials << ",nan,nan,nan";
  }
}

}  // namespace

const char* software_version() {
#ifdef COOPBF_VERSION
  return COOPBF_VERSION;
#else
  return "0.0.0";
#endif
}

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::AlphaSweep: return "alpha-sweep";
    case Experiment::SnrSweep: return "snr-sweep";
    case Experiment::CorrSweep: return "corr-sweep";
    case Experiment::SinglePoint: return "point";
  }
  return "unknown";
}

const char* to_string(GainMode mode) {
  return mode == GainMode::Frobenius ? "frobenius" : "vector";
}

const char* to_string(BoundVariant variant) {
  return variant == BoundVariant::Printed ? "printed" : "complex_convention";
}

Experiment parse_experiment(std::string_view text) {
  text = trim(text);
  if (text == "alpha-sweep" || text == "alpha_sweep") return Experiment::AlphaSweep;
  if (text == "snr-sweep" || text == "snr_sweep") return Experiment::SnrSweep;
  if (text == "corr-sweep" || text == "corr_sweep") return Experiment::CorrSweep;
  if (text == "point" || text == "single_point") return Experiment::SinglePoint;
  fail(ErrorCode::InvalidArgument, "unknown experiment '" + std::string(text) + "'");
}

GainMode parse_gain_mode(std::string_view text) {
  text = trim(text);
  if (text == "frobenius") return GainMode::Frobenius;
  if (text == "vector") return GainMode::Vector;
  fail(ErrorCode::InvalidArgument, "gain mode must be frobenius or vector");
}

BoundVariant parse_bound_variant(std::string_view text) {
  text = trim(text);
  if (text == "printed") return BoundVariant::Printed;
  if (text == "complex_convention" || text == "complex-convention") return BoundVariant::ComplexConvention;
  fail(ErrorCode::InvalidArgument, "bound variant must be printed or complex_convention");
}

std::vector<double> parse_range(std::string_view text) {
  text = trim(text);
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    fail(ErrorCode::InvalidArgument, "range must be lo:hi:step, got '" + std::string(text) + "'");
  }
  const double lo = to_double(text.substr(0, first));
  const double hi = to_double(text.substr(first + 1, second - first - 1));
  const double step = to_double(text.substr(second + 1));
  require(step > 0.0, "range step must be positive");
  require(hi >= lo, "range upper end must not be below the lower end");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  require(count <= 1000000, "range has too many points");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(snap(lo + static_cast<double>(i) * step));
  }
  return out;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(to_double(text.substr(0, comma)));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

ExperimentConfig ExperimentConfig::defaults(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  cfg.snr_db_grid = parse_range("2:12:1");
  switch (e) {
    case Experiment::AlphaSweep:
      cfg.alpha_grid = parse_range("0.2:0.8:0.05");
      break;
    case Experiment::SnrSweep:
      cfg.alpha_grid = {0.3, 0.4};
      break;
    case Experiment::CorrSweep:
      cfg.alpha_grid = {0.3};
      cfg.corr_r_grid = {0.0, 0.25, 0.5, 0.75};
      break;
    case Experiment::SinglePoint:
      cfg.alpha_grid = {0.4};
      cfg.snr_db_grid = {4.0};
      break;
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  require(m >= 1, "m must be at least 1");
  require(std::isfinite(ratio_ptotal_ps) && ratio_ptotal_ps > 0.0, "ratio-ptotal-ps must be positive");
  broadcast().validate();
  require(std::isfinite(r_tr) && r_tr >= 0.0, "rtr must be nonnegative");
  require(trials >= 1, "trials must be at least 1");
  require(mimo_antennas >= 1, "mimo-antennas must be at least 1");
  require(!alpha_grid.empty(), "alpha grid must be nonempty");
  require(!snr_db_grid.empty(), "SNR grid must be nonempty");
  for (double a : alpha_grid) {
    require(a > 0.0 && a < 1.0, "every alpha must lie in (0, 1)");
  }
  for (double s : snr_db_grid) {
    require(std::isfinite(s), "SNR values must be finite");
  }
  if (experiment == Experiment::CorrSweep) {
    require(!corr_r_grid.empty(), "correlation grid must be nonempty");
    for (double r : corr_r_grid) {
      require(r >= 0.0 && r < 1.0, "every correlation coefficient must lie in [0, 1)");
    }
  }
  if (experiment == Experiment::SinglePoint) {
    require(alpha_grid.size() == 1 && snr_db_grid.size() == 1,
            "a single point needs exactly one alpha and one SNR value");
  }
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  if (key == "experiment") {
    cfg.experiment = parse_experiment(value);
  } else if (key == "m") {
    cfg.m = to_unsigned(value);
  } else if (key == "ratio-ptotal-ps") {
    cfg.ratio_ptotal_ps = to_double(value);
  } else if (key == "ps") {
    cfg.p_s = to_double(value);
  } else if (key == "rtr") {
    cfg.r_tr = to_double(value);
  } else if (key == "rbr") {
    cfg.r_br = to_double(value);
  } else if (key == "sigma-nbr2") {
    cfg.sigma_nbr2 = to_double(value);
  } else if (key == "alpha") {
    cfg.alpha_grid = parse_list(value);
  } else if (key == "alpha-range") {
    cfg.alpha_grid = parse_range(value);
  } else if (key == "snr-db") {
    cfg.snr_db_grid = parse_list(value);
  } else if (key == "snr-db-range") {
    cfg.snr_db_grid = parse_range(value);
  } else if (key == "corr") {
    cfg.corr_r_grid = parse_list(value);
  } else if (key == "trials") {
    cfg.trials = to_unsigned(value);
  } else if (key == "seed") {
    cfg.seed = to_unsigned(value);
  } else if (key == "gain-mode") {
    cfg.gain_mode = parse_gain_mode(value);
  } else if (key == "bound-variant") {
    cfg.bound_variant = parse_bound_variant(value);
  } else if (key == "baseline") {
    cfg.baseline = to_bool(value);
  } else if (key == "mimo-antennas") {
    cfg.mimo_antennas = to_unsigned(value);
  } else if (key == "workers") {
    cfg.workers = static_cast<unsigned>(std::max<std::uint64_t>(1, to_unsigned(value)));
  } else if (key == "out") {
    cfg.output_path = std::string(trim(value));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown setting '" + std::string(key) + "'");
  }
}

std::string RunManifest::render(bool include_timing) const {
  std::ostringstream os;
  os << "# coopbf " << software_version << '\n';
  for (const auto& [k, v] : config) {
    os << "# config." << k << ": " << v << '\n';
  }
  os << "# master_seed: " << master_seed << '\n';
  os << "# seed_rule: " << seed_rule << '\n';
  for (const auto& [k, v] : results) {
    os << "# result." << k << ": " << v << '\n';
  }
  for (const auto& w : warnings) {
    os << "# warning: " << w << '\n';
  }
  os << "# rows: " << rows << '\n';
  if (include_timing) {
    os << "# wall_clock_seconds: " << num(wall_clock_seconds, 6) << '\n';
  }
  return os.str();
}

SeriesCrossover find_crossover(std::span<const double> grid, std::span<const double> a,
                               std::span<const double> b) {
  require(grid.size() == a.size() && grid.size() == b.size(), "series lengths differ");
  SeriesCrossover out;
  int last_sign = 0;
  double last_x = 0.0;
  double last_d = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = a[i] - b[i];
    const int sign = (d > 0.0) - (d < 0.0);
    if (sign == 0) {
      continue;
    }
    if (last_sign != 0 && sign != last_sign) {
      ++out.sign_changes;
      if (!out.snr_db) {
        out.snr_db = last_x + (grid[i] - last_x) * (last_d / (last_d - d));
      }
    }
    last_sign = sign;
    last_x = grid[i];
    last_d = d;
  }
  return out;
}

AlphaSweepTable alpha_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  AlphaSweepTable table;
  const std::vector<double> alphas = sorted(cfg.alpha_grid);
  for (double snr_db : sorted(cfg.snr_db_grid)) {
    const double sigma_n2 = noise_for_snr_db(cfg.p_total(), snr_db);
    const AlphaSearch search = alpha_search(cfg, sigma_n2);
    std::optional<std::size_t> best;
    for (double alpha : alphas) {
      AlphaSweepRow row;
      row.snr_db = snr_db;
      row.sigma_n2 = sigma_n2;
      row.point = evaluate_alpha(search, alpha);
      if (row.point.feasible) {
        row.p_out_analytical = analytical_outage(cfg.m, row.point.k, cfg.r_tr, row.point.allocation.p2,
                                                 sigma_n2, cfg.bound_variant);
        const double p = row.point.estimate->probability;
        if (!best || p < table.rows[*best].point.estimate->probability) {
          best = table.rows.size();
        }
      } else {
        row.p_out_analytical = kNaN;
        table.warnings.push_back("snr_db=" + num(snr_db, 6) + " alpha=" + num(alpha, 6) +
                                 " infeasible: broadcast power bound not met");
      }
      table.rows.push_back(std::move(row));
    }
    if (best) {
      table.optima.push_back(table.rows[*best]);
    } else {
      table.warnings.push_back("snr_db=" + num(snr_db, 6) + " has no feasible alpha");
    }
  }

  // The summary must be the row-wise minimum of its SNR group.
  for (const auto& opt : table.optima) {
    for (const auto& row : table.rows) {
      if (row.snr_db == opt.snr_db && row.point.feasible &&
          row.point.estimate->probability < opt.point.estimate->probability) {
        fail(ErrorCode::InvalidArgument, "internal error: alpha summary is not the group minimum");
      }
    }
  }
  return table;
}

SnrSweepTable snr_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  SnrSweepTable table;
  const std::vector<double> alphas = sorted(cfg.alpha_grid);
  const std::vector<double> grid = sorted(cfg.snr_db_grid);
  for (double a : alphas) {
    table.series.push_back(series_name(a));
  }
  const std::string mimo_name =
      "mimo" + std::to_string(cfg.mimo_antennas) + "x" + std::to_string(cfg.mimo_antennas);
  if (cfg.baseline) {
    table.series.push_back(mimo_name);
  }

  const BroadcastSpec spec = cfg.broadcast();
  for (double snr_db : grid) {
    const double sigma_n2 = noise_for_snr_db(cfg.p_total(), snr_db);
    for (double alpha : alphas) {
      SnrSweepRow row;
      row.snr_db = snr_db;
      row.series = series_name(alpha);
      row.alpha = alpha;
      row.sigma_n2 = sigma_n2;
      const PowerAllocation alloc = split(cfg.p_total(), alpha);
      row.p2 = alloc.p2;
      const double k_real = cluster_size_real(alpha, cfg.p_total(), cfg.p_s);
      row.feasible = k_real + 1e-9 >= 0.5;
      if (row.feasible) {
        row.k = cluster_size(alpha, cfg.p_total(), cfg.p_s);
        row.feasible = broadcast_feasible(alloc.p1, row.k, spec);
      }
      if (row.feasible) {
        row.estimate = monte_carlo_outage(outage_config(cfg, row.k, alloc.p2, sigma_n2));
      } else {
        table.warnings.push_back("snr_db=" + num(snr_db, 6) + " alpha=" + num(alpha, 6) +
                                 " infeasible: broadcast power bound not met");
      }
      table.rows.push_back(std::move(row));
    }
    if (cfg.baseline) {
      MimoConfig mc;
      mc.n_tx = cfg.mimo_antennas;
      mc.n_rx = cfg.mimo_antennas;
      mc.p_mimo = cfg.p_total();
      mc.sigma_n2 = sigma_n2;
      mc.r_tr = cfg.r_tr;
      mc.trials = cfg.trials;
      mc.seed = cfg.seed;
      mc.workers = cfg.workers;
      SnrSweepRow row;
      row.snr_db = snr_db;
      row.series = mimo_name;
      row.alpha = kNaN;
      row.k = cfg.mimo_antennas;
      row.p2 = cfg.p_total();
      row.sigma_n2 = sigma_n2;
      row.estimate = mimo_outage(mc);
      table.rows.push_back(std::move(row));
    }
  }

  auto column = [&](const std::string& name) {
    std::vector<double> v;
    for (const auto& row : table.rows) {
      if (row.series == name) {
        v.push_back(row.estimate ? row.estimate->probability : kNaN);
      }
    }
    return v;
  };
  auto has_nan = [](const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return std::isnan(x); });
  };
  auto add_crossover = [&](const std::string& a, const std::string& b) {
    const auto va = column(a);
    const auto vb = column(b);
    if (has_nan(va) || has_nan(vb)) {
      return;
    }
    SeriesCrossover c = find_crossover(grid, va, vb);
    c.first = a;
    c.second = b;
    table.crossovers.push_back(std::move(c));
  };
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    add_crossover(series_name(alphas[i]), series_name(alphas[i + 1]));
  }
  if (cfg.baseline) {
    for (double a : alphas) {
      add_crossover(series_name(a), mimo_name);
    }
  }
  return table;
}

CorrSweepTable corr_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  CorrSweepTable table;
  const BroadcastSpec spec = cfg.broadcast();
  const std::vector<double> rs = sorted(cfg.corr_r_grid);
  for (double snr_db : sorted(cfg.snr_db_grid)) {
    const double sigma_n2 = noise_for_snr_db(cfg.p_total(), snr_db);
    for (double alpha : sorted(cfg.alpha_grid)) {
      const PowerAllocation alloc = split(cfg.p_total(), alpha);
      const double k_real = cluster_size_real(alpha, cfg.p_total(), cfg.p_s);
      bool feasible = k_real + 1e-9 >= 0.5;
      std::size_t k = 0;
      if (feasible) {
        k = cluster_size(alpha, cfg.p_total(), cfg.p_s);
        feasible = broadcast_feasible(alloc.p1, k, spec);
      }
      const CorrSweepRow* previous = nullptr;
      for (double r : rs) {
        const CorrelationMatrix c = exponential_correlation(cfg.m, r);
        CorrSweepRow row;
        row.snr_db = snr_db;
        row.corr_r = r;
        row.rho_level = c.level();
        row.alpha = alpha;
        row.k = k;
        row.p2 = alloc.p2;
        row.sigma_n2 = sigma_n2;
        row.feasible = feasible;
        if (feasible) {
          OutageConfig oc = outage_config(cfg, k, alloc.p2, sigma_n2);
          oc.correlation = c;
          row.estimate = monte_carlo_outage(oc);
          if (previous && previous->estimate &&
              row.estimate->probability < previous->estimate->probability - 3.0 * row.estimate->std_error) {
            table.warnings.push_back("snr_db=" + num(snr_db, 6) + " alpha=" + num(alpha, 6) +
                                     ": outage drops from " + num(previous->estimate->probability, 6) +
                                     " to " + num(row.estimate->probability, 6) + " as rho rises to " +
                                     num(row.rho_level, 6));
          }
        } else {
          table.warnings.push_back("snr_db=" + num(snr_db, 6) + " alpha=" + num(alpha, 6) +
                                   " infeasible: broadcast power bound not met");
        }
        table.rows.push_back(std::move(row));
        previous = &table.rows.back();
      }
    }
  }
  return table;
}

PointReport single_point(const ExperimentConfig& cfg) {
  cfg.validate();
  PointReport rep;
  const double alpha = cfg.alpha_grid.front();
  rep.snr_db = cfg.snr_db_grid.front();
  rep.sigma_n2 = noise_for_snr_db(cfg.p_total(), rep.snr_db);
  rep.allocation = split(cfg.p_total(), alpha);
  rep.k_real = cluster_size_real(alpha, cfg.p_total(), cfg.p_s);
  const BroadcastSpec spec = cfg.broadcast();
  if (rep.k_real + 1e-9 >= 0.5) {
    rep.allocation.k = cluster_size(alpha, cfg.p_total(), cfg.p_s);
    rep.broadcast_bound = broadcast_power_bound(rep.allocation.k, spec);
    rep.feasible = broadcast_feasible(rep.allocation.p1, rep.allocation.k, spec);
  } else {
    rep.broadcast_bound = kNaN;
    rep.feasible = false;
    rep.warnings.emplace_back("cluster would hold no node (alpha * P_total / P_s < 0.5)");
  }
  if (!rep.feasible) {
    rep.bound_printed = kNaN;
    rep.bound_complex = kNaN;
    return rep;
  }
  rep.estimate = monte_carlo_outage(outage_config(cfg, rep.allocation.k, rep.allocation.p2, rep.sigma_n2));
  rep.bound_printed = analytical_outage(cfg.m, rep.allocation.k, cfg.r_tr, rep.allocation.p2, rep.sigma_n2,
                                        BoundVariant::Printed);
  rep.bound_complex = analytical_outage(cfg.m, rep.allocation.k, cfg.r_tr, rep.allocation.p2, rep.sigma_n2,
                                        BoundVariant::ComplexConvention);
  if (cfg.trials == 1) {
    rep.warnings.emplace_back("a single trial gives a probability of 0 or 1 with zero standard error");
  }
  return rep;
}

ExperimentOutput run_alpha_sweep(const ExperimentConfig& cfg) {
  const Stopwatch clock;
  const AlphaSweepTable table = alpha_sweep(cfg);
  ExperimentOutput out;
  out.manifest = base_manifest(cfg);
  out.manifest.warnings = table.warnings;
  for (const auto& opt : table.optima) {
    out.manifest.results.emplace_back("alpha_star[snr_db=" + num(opt.snr_db, 6) + "]",
                                      num(opt.point.alpha, 6) + " (K=" + std::to_string(opt.point.k) + ")");
  }

  std::ostringstream body;
  body << "kind,snr_db,alpha,k_real,k,m,r_tr,p_total,p1,p2,sigma_n2,feasible,trials,outages,p_out_mc,std_err,"
          "p_out_analytical\n";
  auto write = [&](const char* kind, const AlphaSweepRow& row) {
    const auto& pt = row.point;
    body << kind << ',' << num(row.snr_db, 12) << ',' << num(pt.alpha, 12) << ',' << num(pt.k_real, 12) << ','
         << pt.k << ',' << cfg.m << ',' << num(cfg.r_tr, 12) << ',' << num(pt.allocation.p_total, 12) << ','
         << num(pt.allocation.p1, 12) << ',' << num(pt.allocation.p2, 12) << ',' << num(row.sigma_n2, 12) << ','
         << (pt.feasible ? 1 : 0) << ',';
    std::ostringstream est;
    append_estimate(est, pt.estimate, cfg.trials);
    body << est.str() << ',' << num(row.p_out_analytical) << '\n';
  };
  for (const auto& row : table.rows) {
    write("point", row);
  }
  for (const auto& row : table.optima) {
    write("optimum", row);
  }
  out.manifest.rows = table.rows.size() + table.optima.size();
  out.manifest.wall_clock_seconds = clock.seconds();
  out.text = out.manifest.render(false) + body.str();
  return out;
}

ExperimentOutput run_snr_sweep(const ExperimentConfig& cfg) {
  const Stopwatch clock;
  const SnrSweepTable table = snr_sweep(cfg);
  ExperimentOutput out;
  out.manifest = base_manifest(cfg);
  out.manifest.warnings = table.warnings;
  for (const auto& c : table.crossovers) {
    out.manifest.results.emplace_back(
        "crossover[" + c.first + " vs " + c.second + "]",
        (c.snr_db ? num(*c.snr_db, 6) + " dB" : std::string("none")) + " (" + std::to_string(c.sign_changes) +
            " sign change" + (c.sign_changes == 1 ? "" : "s") + ")");
  }

  std::ostringstream body;
  body << "snr_db,series,alpha,k,m,r_tr,p_total,p2,sigma_n2,feasible,trials,outages,p_out,std_err\n";
  for (const auto& row : table.rows) {
    body << num(row.snr_db, 12) << ',' << row.series << ',' << num(row.alpha, 12) << ',' << row.k << ','
         << (std::isnan(row.alpha) ? cfg.mimo_antennas : cfg.m) << ',' << num(cfg.r_tr, 12) << ','
         << num(cfg.p_total(), 12) << ',' << num(row.p2, 12) << ',' << num(row.sigma_n2, 12) << ','
         << (row.feasible ? 1 : 0) << ',';
    std::ostringstream est;
    append_estimate(est, row.estimate, cfg.trials);
    body << est.str() << '\n';
  }
  out.manifest.rows = table.rows.size();
  out.manifest.wall_clock_seconds = clock.seconds();
  out.text = out.manifest.render(false) + body.str();
  return out;
}

ExperimentOutput run_corr_sweep(const ExperimentConfig& cfg) {
  const Stopwatch clock;
  const CorrSweepTable table = corr_sweep(cfg);
  ExperimentOutput out;
  out.manifest = base_manifest(cfg);
  out.manifest.warnings = table.warnings;
  out.manifest.results.emplace_back("correlation_model", "C[i][j] = r^|i-j|, applied as C*H on the receive side");

  std::ostringstream body;
  body << "snr_db,corr_r,rho_level,alpha,k,m,r_tr,p_total,p2,sigma_n2,feasible,trials,outages,p_out,std_err\n";
  for (const auto& row : table.rows) {
    body << num(row.snr_db, 12) << ',' << num(row.corr_r, 12) << ',' << num(row.rho_level, 12) << ','
         << num(row.alpha, 12) << ',' << row.k << ',' << cfg.m << ',' << num(cfg.r_tr, 12) << ','
         << num(cfg.p_total(), 12) << ',' << num(row.p2, 12) << ',' << num(row.sigma_n2, 12) << ','
         << (row.feasible ? 1 : 0) << ',';
    std::ostringstream est;
    append_estimate(est, row.estimate, cfg.trials);
    body << est.str() << '\n';
  }
  out.manifest.rows = table.rows.size();
  out.manifest.wall_clock_seconds = clock.seconds();
  out.text = out.manifest.render(false) + body.str();
  return out;
}

ExperimentOutput run_single_point(const ExperimentConfig& cfg) {
  const Stopwatch clock;
  const PointReport rep = single_point(cfg);
  ExperimentOutput out;
  out.manifest = base_manifest(cfg);
  out.manifest.warnings = rep.warnings;
  out.feasible = rep.feasible;

  std::ostringstream body;
  const auto& a = rep.allocation;
  body << "status: " << (rep.feasible ? "ok" : "infeasible") << '\n';
  body << "snr_db: " << num(rep.snr_db, 12) << '\n';
  body << "sigma_n2: " << num(rep.sigma_n2, 12) << '\n';
  body << "p_total: " << num(a.p_total, 12) << '\n';
  body << "alpha: " << num(a.alpha, 12) << '\n';
  body << "p1: " << num(a.p1, 12) << '\n';
  body << "p2: " << num(a.p2, 12) << '\n';
  body << "p1_fraction: " << num(a.p1 / a.p_total, 12) << '\n';
  body << "k_real: " << num(rep.k_real, 12) << '\n';
  body << "k: " << a.k << '\n';
  body << "broadcast_bound: " << num(rep.broadcast_bound, 12) << '\n';
  body << "broadcast_feasible: " << (rep.feasible ? "true" : "false") << '\n';
  if (rep.estimate) {
    body << "threshold: " << num(rep.estimate->threshold) << '\n';
    body << "trials: " << rep.estimate->trials << '\n';
    body << "outages: " << rep.estimate->outages << '\n';
    body << "p_out_mc: " << num(rep.estimate->probability) << '\n';
    body << "std_err: " << num(rep.estimate->std_error) << '\n';
  }
  body << "p_out_analytical_printed: " << num(rep.bound_printed) << '\n';
  body << "p_out_analytical_complex_convention: " << num(rep.bound_complex) << '\n';
  body << "p_out_analytical: "
       << num(cfg.bound_variant == BoundVariant::Printed ? rep.bound_printed : rep.bound_complex) << '\n';
  out.manifest.rows = 1;
  out.manifest.wall_clock_seconds = clock.seconds();
  out.text = out.manifest.render(false) + body.str();
  return out;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::AlphaSweep: return run_alpha_sweep(cfg);
    case Experiment::SnrSweep: return run_snr_sweep(cfg);
    case Experiment::CorrSweep: return run_corr_sweep(cfg);
    case Experiment::SinglePoint: return run_single_point(cfg);
  }
  fail(ErrorCode::InvalidArgument, "unknown experiment");
}

}  // namespace coopbf
