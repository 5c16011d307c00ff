// Copyright 2026 the netimb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "netimb/classical.hpp"
#include "netimb/experiments.hpp"
#include "oracles.hpp"

using namespace netimb;

namespace {
SweepSpec small_er_spec() {
  SweepSpec spec;
  spec.model = SweepModel::kErdosRenyi;
  spec.n = 30;
  spec.param_grid = {0.0, 0.1, 0.3};
  spec.profiles = {QoSProfile(1.0, 4.0)};
  spec.runs = 5;
  spec.base_seed = 42;
  return spec;
}
}  // namespace

TEST_CASE("default profile set") {
  const auto profiles = default_sweep_profiles();
  REQUIRE(profiles.size() == 3);
  CHECK(profiles[0].steepness == 1.0);
  CHECK(profiles[0].hop_threshold == 4.0);
  CHECK(profiles[1].steepness == 2.0);
  CHECK(profiles[1].hop_threshold == 3.0);
  CHECK(profiles[2].steepness == 0.5);
  CHECK(profiles[2].hop_threshold == 6.0);
}

TEST_CASE("sweep shape, aggregation, and the p = 0 edge case") {
  const SweepResult r = run_sweep(small_er_spec());
  REQUIRE(r.points.size() == 3);
  // p = 0: no edges ever, so I = 1 exactly in every run
  CHECK(r.points[0].param == 0.0);
  CHECK(r.points[0].mean_I == 1.0);
  CHECK(r.points[0].std_I == 0.0);
  for (const SweepPoint& point : r.points) {
    REQUIRE(point.run_values.size() == 5);
    double mean = 0;
    for (const double v : point.run_values) mean += v;
    mean /= 5.0;
    CHECK(point.mean_I == doctest::Approx(mean).epsilon(1e-15));
    double ss = 0;
    for (const double v : point.run_values) ss += (v - mean) * (v - mean);
    CHECK(point.std_I == doctest::Approx(std::sqrt(ss / 4.0)).epsilon(1e-12));
  }
}

TEST_CASE("sweep run r regenerates the exact graph for seed base+r") {
  const SweepSpec spec = small_er_spec();
  const SweepResult r = run_sweep(spec);
  const Graph g = erdos_renyi(30, 0.1, 42 + 3);
  CHECK(r.points[1].run_values[3] ==
        imbalance(g, spec.profiles[0]).I);
}

TEST_CASE("sweep bytes are reproducible and worker-count independent") {
  SweepSpec spec = small_er_spec();
  spec.profiles = default_sweep_profiles();
  const std::string a = sweep_csv(run_sweep(spec, 1));
  const std::string b = sweep_csv(run_sweep(spec, 7));
  CHECK(a == b);
  CHECK(a.rfind("model,n,param,a,h0,runs,mean_I,std_I\n", 0) == 0);
  // one row per (grid point, profile) plus header
  CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 3 * 3);
}

TEST_CASE("sweep validation") {
  SweepSpec spec = small_er_spec();
  spec.param_grid.clear();
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = small_er_spec();
  spec.runs = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = small_er_spec();
  spec.profiles.clear();
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  // BA grids must be integral
  spec = small_er_spec();
  spec.model = SweepModel::kBarabasiAlbert;
  spec.param_grid = {2.0, 2.5};
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec.param_grid = {2.0, 3.0};
  CHECK_NOTHROW(run_sweep(spec));
}

TEST_CASE("ws sweep honors the lattice neighbor count") {
  SweepSpec spec;
  spec.model = SweepModel::kWattsStrogatz;
  spec.n = 24;
  spec.param_grid = {0.1};
  spec.profiles = {QoSProfile(1.0, 4.0)};
  spec.runs = 2;
  spec.base_seed = 11;
  spec.ws_neighbors = 6;
  const SweepResult r = run_sweep(spec);
  CHECK(r.points[0].run_values[0] ==
        imbalance(watts_strogatz(24, 6, 0.1, 11), spec.profiles[0]).I);
}

TEST_CASE("zoo landscape covers both fairness-with-homogeneity and "
          "fairness-with-heterogeneity") {
  const auto zoo = zoo_landscape(1, QoSProfile(3.0, 4.0));
  REQUIRE(zoo.size() == 7);
  const auto find = [&](const std::string& name) -> const ZooPoint& {
    const auto it = std::find_if(zoo.begin(), zoo.end(), [&](const ZooPoint& z) {
      return z.model == name;
    });
    REQUIRE(it != zoo.end());
    return *it;
  };
  const ZooPoint& k = find("complete");
  CHECK(k.degree_gini == 0.0);
  CHECK(k.I == 0.0);
  const ZooPoint& r = find("ring");
  CHECK(r.degree_gini == 0.0);
  CHECK(r.I > 0.0);  // regular yet not perfectly fair
  CHECK(r.I == doctest::Approx(0.22899403687895781).epsilon(1e-12));
  const ZooPoint& ba = find("ba");
  CHECK(ba.degree_gini > 0.3);  // heavy structural inequality
  CHECK(ba.I < 0.05);           // yet functionally fair
  const ZooPoint& st = find("star");
  CHECK(st.degree_gini > 0.4);
  CHECK(st.I < 0.05);
  // deterministic given the seed
  const auto again = zoo_landscape(1, QoSProfile(3.0, 4.0));
  CHECK(zoo_csv(again) == zoo_csv(zoo));
  CHECK(zoo_csv(zoo).rfind("model,degree_gini,I\n", 0) == 0);
}

TEST_CASE("ws comparison table: same graphs, four metrics, means over runs") {
  const std::vector<double> grid = {0.01, 0.3};
  const QoSProfile profile(1.0, 4.0);
  const auto rows = ws_metric_comparison(20, 4, grid, profile, 3, 99);
  REQUIRE(rows.size() == 2);
  // re-derive the first cell by hand
  double mean_I = 0, mean_apl = 0;
  for (std::size_t run = 0; run < 3; ++run) {
    const Graph g = watts_strogatz(20, 4, 0.01, 99 + run);
    const HopHistogram hist = all_pairs_histogram(g);
    mean_I += imbalance_from_histogram(hist, profile).I;
    mean_apl += average_path_length(hist);
  }
  CHECK(rows[0].mean_I == doctest::Approx(mean_I / 3).epsilon(1e-14));
  CHECK(rows[0].mean_avg_path_length ==
        doctest::Approx(mean_apl / 3).epsilon(1e-14));
  // the lattice end has the longest paths
  CHECK(rows[0].mean_avg_path_length > rows[1].mean_avg_path_length);
  CHECK(ws_comparison_csv(rows).rfind(
            "p,mean_I,mean_jain_unfairness,mean_avg_path_length,"
            "mean_path_variance\n",
            0) == 0);
  CHECK_THROWS_AS(ws_metric_comparison(20, 4, {}, profile, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ws_metric_comparison(20, 4, grid, profile, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("ba reversal: strict lens inflates I on the same graphs") {
  const BaReversalResult r = ba_qos_reversal(50, 3, 6, 31);
  CHECK(r.mean_I_strict > r.mean_I_lenient);
  CHECK(r.mean_I_lenient < 0.05);
  CHECK(r.warning.empty());
  const BaReversalResult single = ba_qos_reversal(20, 2, 1, 31);
  CHECK(single.std_I_strict == 0.0);
  CHECK_FALSE(single.warning.empty());
  const std::string csv = ba_reversal_csv(r);
  CHECK(csv.rfind("h0,mean_I,std_I\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("grid helpers") {
  const auto lin = lin_spaced(0.0, 0.4, 41);
  REQUIRE(lin.size() == 41);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 0.4);
  CHECK(lin[20] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(lin_spaced(3.0, 3.0, 1) == std::vector<double>{3.0});

  const auto log = log_spaced(1e-3, 1.0, 4);
  REQUIRE(log.size() == 4);
  CHECK(log.front() == 1e-3);
  CHECK(log.back() == 1.0);
  CHECK(log[1] == doctest::Approx(1e-2).epsilon(1e-12));
  CHECK(log[2] == doctest::Approx(1e-1).epsilon(1e-12));

  CHECK_THROWS_AS(lin_spaced(1.0, 0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(lin_spaced(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(lin_spaced(1.0, 2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(0.1, 1.0, 1), std::invalid_argument);
}
