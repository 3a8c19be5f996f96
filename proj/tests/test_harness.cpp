#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "coopbf/error.hpp"
#include "coopbf/harness.hpp"

namespace coopbf {
namespace {

ExperimentConfig quick(Experiment e) {
  ExperimentConfig cfg = ExperimentConfig::defaults(e);
  cfg.trials = 4000;
  return cfg;
}

TEST(Parsing, Range) {
  const auto v = parse_range("0.2:0.8:0.05");
  ASSERT_EQ(v.size(), 13U);
  EXPECT_EQ(v.front(), 0.2);
  EXPECT_EQ(v[2], 0.3);
  EXPECT_EQ(v.back(), 0.8);
  EXPECT_EQ(parse_range("2:12:1").size(), 11U);
  EXPECT_EQ(parse_range("4:4:1"), std::vector<double>{4.0});
  EXPECT_THROW(parse_range("1:2"), Error);
  EXPECT_THROW(parse_range("2:1:0.5"), Error);
  EXPECT_THROW(parse_range("1:2:0"), Error);
  EXPECT_THROW(parse_range("a:2:1"), Error);
}

TEST(Parsing, List) {
  EXPECT_EQ(parse_list("0.3,0.4"), (std::vector<double>{0.3, 0.4}));
  EXPECT_EQ(parse_list("7"), std::vector<double>{7.0});
  EXPECT_THROW(parse_list("0.3,,0.4"), Error);
}

TEST(Parsing, Names) {
  EXPECT_EQ(parse_experiment("corr-sweep"), Experiment::CorrSweep);
  EXPECT_EQ(parse_gain_mode("vector"), GainMode::Vector);
  EXPECT_EQ(parse_bound_variant("complex_convention"), BoundVariant::ComplexConvention);
  EXPECT_STREQ(to_string(BoundVariant::Printed), "printed");
  EXPECT_THROW(parse_experiment("sweep"), Error);
  EXPECT_THROW(parse_gain_mode("spectral"), Error);
}

TEST(Config, Defaults) {
  const ExperimentConfig cfg = ExperimentConfig::defaults(Experiment::AlphaSweep);
  EXPECT_EQ(cfg.m, 3U);
  EXPECT_EQ(cfg.ratio_ptotal_ps, 15.0);
  EXPECT_EQ(cfg.r_tr, 3.0);
  EXPECT_EQ(cfg.r_br, 2.0);
  EXPECT_EQ(cfg.trials, 100000U);
  EXPECT_EQ(cfg.p_total(), 60.0);
  EXPECT_EQ(cfg.snr_db_grid.size(), 11U);
  EXPECT_EQ(cfg.alpha_grid.size(), 13U);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, Settings) {
  ExperimentConfig cfg = ExperimentConfig::defaults(Experiment::SnrSweep);
  apply_setting(cfg, "alpha", "0.25,0.5");
  apply_setting(cfg, "trials", "123");
  apply_setting(cfg, "baseline", "false");
  apply_setting(cfg, "gain-mode", "vector");
  EXPECT_EQ(cfg.alpha_grid, (std::vector<double>{0.25, 0.5}));
  EXPECT_EQ(cfg.trials, 123U);
  EXPECT_FALSE(cfg.baseline);
  EXPECT_EQ(cfg.gain_mode, GainMode::Vector);
  EXPECT_THROW(apply_setting(cfg, "alhpa", "0.3"), Error);
  EXPECT_THROW(apply_setting(cfg, "trials", "-3"), Error);
  EXPECT_THROW(apply_setting(cfg, "m", "three"), Error);
}

TEST(Config, Validation) {
  ExperimentConfig cfg = quick(Experiment::AlphaSweep);
  cfg.alpha_grid = {0.3, 1.0};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = quick(Experiment::SinglePoint);
  cfg.snr_db_grid = {2.0, 4.0};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = quick(Experiment::CorrSweep);
  cfg.corr_r_grid = {1.0};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = quick(Experiment::AlphaSweep);
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(AlphaSweep, SinglePointGridGivesPointAndOptimum) {
  ExperimentConfig cfg = quick(Experiment::AlphaSweep);
  cfg.alpha_grid = {0.3};
  cfg.snr_db_grid = {6.0};
  const AlphaSweepTable t = alpha_sweep(cfg);
  ASSERT_EQ(t.rows.size(), 1U);
  ASSERT_EQ(t.optima.size(), 1U);
  EXPECT_EQ(t.optima[0].point.alpha, 0.3);
  EXPECT_EQ(t.optima[0].point.estimate->outages, t.rows[0].point.estimate->outages);
}

TEST(AlphaSweep, RowsAreConsistent) {
  ExperimentConfig cfg = quick(Experiment::AlphaSweep);
  cfg.snr_db_grid = {3.0, 9.0};
  const AlphaSweepTable t = alpha_sweep(cfg);
  ASSERT_EQ(t.rows.size(), 26U);
  ASSERT_EQ(t.optima.size(), 2U);
  for (const auto& row : t.rows) {
    ASSERT_TRUE(row.point.feasible);
    const auto& est = *row.point.estimate;
    EXPECT_LE(row.p_out_analytical, est.probability + 3.0 * est.std_error + 1e-12);
    EXPECT_DOUBLE_EQ(row.point.allocation.p1 + row.point.allocation.p2, 60.0);
    EXPECT_EQ(row.point.k, cluster_size(row.point.alpha, 60.0, 4.0));
  }
  for (const auto& opt : t.optima) {
    for (const auto& row : t.rows) {
      if (row.snr_db == opt.snr_db) {
        EXPECT_LE(opt.point.estimate->probability, row.point.estimate->probability);
      }
    }
  }
}

TEST(AlphaSweep, InfeasibleRowsAreFlaggedAndExcluded) {
  ExperimentConfig cfg = quick(Experiment::AlphaSweep);
  cfg.p_s = 3.0;
  cfg.alpha_grid = {0.2, 0.3};
  cfg.snr_db_grid = {5.0};
  const AlphaSweepTable t = alpha_sweep(cfg);
  ASSERT_EQ(t.rows.size(), 2U);
  EXPECT_TRUE(t.rows[0].point.feasible);
  EXPECT_FALSE(t.rows[1].point.feasible);
  EXPECT_TRUE(std::isnan(t.rows[1].p_out_analytical));
  ASSERT_EQ(t.optima.size(), 1U);
  EXPECT_EQ(t.optima[0].point.alpha, 0.2);
  EXPECT_EQ(t.warnings.size(), 1U);

  const std::string csv = run_alpha_sweep(cfg).text;
  EXPECT_NE(csv.find(",0,4000,nan,nan,nan,nan\n"), std::string::npos) << csv;
}

TEST(AlphaSweep, CsvLayoutAndReruns) {
  ExperimentConfig cfg = quick(Experiment::AlphaSweep);
  cfg.alpha_grid = {0.3, 0.4};
  cfg.snr_db_grid = {4.0};
  const ExperimentOutput a = run_alpha_sweep(cfg);
  cfg.workers = 4;
  const ExperimentOutput b = run_alpha_sweep(cfg);
  EXPECT_EQ(a.text, b.text);
  EXPECT_NE(a.text.find("# master_seed: 1\n"), std::string::npos);
  EXPECT_EQ(a.text.find("wall"), std::string::npos);
  EXPECT_NE(a.text.find("\nkind,snr_db,alpha,k_real,k,m,r_tr,p_total,p1,p2,sigma_n2,feasible,trials,outages,"
                        "p_out_mc,std_err,p_out_analytical\n"),
            std::string::npos);
  EXPECT_NE(a.manifest.render(true).find("wall_clock"), std::string::npos);
}

TEST(SnrSweep, SeriesAndBaselineToggle) {
  ExperimentConfig cfg = quick(Experiment::SnrSweep);
  cfg.snr_db_grid = {2.0, 6.0, 10.0};
  const SnrSweepTable with = snr_sweep(cfg);
  EXPECT_EQ(with.series, (std::vector<std::string>{"alpha=0.3", "alpha=0.4", "mimo3x3"}));
  EXPECT_EQ(with.rows.size(), 9U);
  EXPECT_EQ(with.crossovers.size(), 3U);
  for (std::size_t i = 1; i < with.rows.size(); ++i) {
    EXPECT_LE(with.rows[i - 1].snr_db, with.rows[i].snr_db);
  }
  cfg.baseline = false;
  const SnrSweepTable without = snr_sweep(cfg);
  EXPECT_EQ(without.rows.size(), 6U);
  for (const auto& row : without.rows) {
    EXPECT_EQ(row.series.rfind("alpha=", 0), 0U);
  }
  EXPECT_EQ(run_snr_sweep(cfg).text.find("mimo3x3"), std::string::npos);
}

TEST(SnrSweep, SameSeedSameRows) {
  ExperimentConfig cfg = quick(Experiment::SnrSweep);
  cfg.snr_db_grid = {4.0, 8.0};
  EXPECT_EQ(run_snr_sweep(cfg).text, run_snr_sweep(cfg).text);
}

TEST(CorrSweep, ZeroCorrelationMatchesUncorrelatedRun) {
  ExperimentConfig cfg = quick(Experiment::CorrSweep);
  cfg.snr_db_grid = {6.0};
  cfg.corr_r_grid = {0.0, 0.5};
  const CorrSweepTable t = corr_sweep(cfg);
  ASSERT_EQ(t.rows.size(), 2U);
  EXPECT_EQ(t.rows[0].rho_level, 0.0);
  EXPECT_DOUBLE_EQ(t.rows[1].rho_level, correlation_level(exponential_correlation(3, 0.5)));

  OutageConfig oc;
  oc.k = t.rows[0].k;
  oc.m = 3;
  oc.p2 = t.rows[0].p2;
  oc.sigma_n2 = t.rows[0].sigma_n2;
  oc.trials = cfg.trials;
  oc.seed = cfg.seed;
  EXPECT_EQ(monte_carlo_outage(oc).outages, t.rows[0].estimate->outages);
}

TEST(SinglePoint, DefaultPoint) {
  ExperimentConfig cfg = quick(Experiment::SinglePoint);
  const PointReport rep = single_point(cfg);
  EXPECT_TRUE(rep.feasible);
  EXPECT_EQ(rep.allocation.k, 6U);
  EXPECT_DOUBLE_EQ(rep.allocation.p1 / rep.allocation.p_total, 0.4);
  EXPECT_EQ(rep.broadcast_bound, 18.0);
  EXPECT_NE(rep.bound_printed, rep.bound_complex);
  EXPECT_TRUE(rep.warnings.empty());

  const std::string text = run_single_point(cfg).text;
  EXPECT_NE(text.find("status: ok\n"), std::string::npos);
  EXPECT_NE(text.find("k: 6\n"), std::string::npos);
  EXPECT_NE(text.find("p1_fraction: 0.4\n"), std::string::npos);
}

TEST(SinglePoint, OneTrialWarns) {
  ExperimentConfig cfg = quick(Experiment::SinglePoint);
  cfg.trials = 1;
  const PointReport rep = single_point(cfg);
  ASSERT_TRUE(rep.estimate.has_value());
  EXPECT_EQ(rep.estimate->std_error, 0.0);
  EXPECT_EQ(rep.warnings.size(), 1U);
}

TEST(SinglePoint, Infeasible) {
  ExperimentConfig cfg = quick(Experiment::SinglePoint);
  cfg.p_s = 1.0;
  const ExperimentOutput out = run_single_point(cfg);
  EXPECT_FALSE(out.feasible);
  EXPECT_NE(out.text.find("status: infeasible\n"), std::string::npos);
  EXPECT_EQ(out.text.find("p_out_mc"), std::string::npos);
}

TEST(FindCrossover, Interpolates) {
  const std::vector<double> grid{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> a{0.5, 0.4, 0.2, 0.1};
  const std::vector<double> b{0.3, 0.3, 0.3, 0.3};
  const SeriesCrossover c = find_crossover(grid, a, b);
  EXPECT_EQ(c.sign_changes, 1);
  ASSERT_TRUE(c.snr_db.has_value());
  EXPECT_DOUBLE_EQ(*c.snr_db, 1.5);
}

TEST(FindCrossover, TiesAndNoChange) {
  const std::vector<double> grid{0.0, 1.0, 2.0};
  const std::vector<double> a{0.5, 0.3, 0.1};
  const std::vector<double> b{0.3, 0.3, 0.3};
  const SeriesCrossover c = find_crossover(grid, a, b);
  EXPECT_EQ(c.sign_changes, 1);
  EXPECT_DOUBLE_EQ(*c.snr_db, 1.0);
  const std::vector<double> d{0.4, 0.4, 0.4};
  EXPECT_EQ(find_crossover(grid, d, b).sign_changes, 0);
  EXPECT_FALSE(find_crossover(grid, d, b).snr_db.has_value());
}

}  // namespace
}  // namespace coopbf
