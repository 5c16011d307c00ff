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

#ifndef NETIMB_EXPERIMENTS_HPP_
#define NETIMB_EXPERIMENTS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "netimb/generators.hpp"
#include "netimb/graph.hpp"
#include "netimb/imbalance.hpp"

namespace netimb {

enum class SweepModel { kErdosRenyi, kBarabasiAlbert, kWattsStrogatz };

/// Description of a seeded random-graph sweep. Run r of any grid point uses
/// seed base_seed + r, so different grid points and different profiles see
/// the same family of graphs (paired comparisons).
struct SweepSpec {
  SweepModel model = SweepModel::kErdosRenyi;
  std::size_t n = 0;
  /// Model parameter per grid point: edge probability p for Erdos-Renyi and
  /// Watts-Strogatz, integral attachment count m for Barabasi-Albert.
  std::vector<double> param_grid;
  std::vector<QoSProfile> profiles;
  std::size_t runs = 0;
  Seed base_seed = 0;
  /// Lattice neighbor count k for Watts-Strogatz sweeps; ignored otherwise.
  std::size_t ws_neighbors = 4;
};

/// Spans lenient-to-strict lenses; used by the CLI when no profiles are
/// given: (a, h0) in {(1, 4), (2, 3), (0.5, 6)}.
std::vector<QoSProfile> default_sweep_profiles();

struct SweepPoint {
  double param = 0;
  double a = 0;
  double h0 = 0;
  double mean_I = 0;
  double std_I = 0;  // sample standard deviation (0 when runs == 1)
  std::vector<double> run_values;
};

struct SweepResult {
  SweepSpec spec;
  /// Ordered by (grid index, profile index).
  std::vector<SweepPoint> points;
};

/// Runs the sweep; graphs for one (grid point, run) pair are generated once
/// and shared across profiles. Runs may execute concurrently; aggregation
/// order is fixed by (grid index, run index), so results are independent of
/// the worker count. Throws std::invalid_argument for an empty grid, empty
/// profile list, zero runs, or non-integral Barabasi-Albert parameters.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// CSV with header "model,n,param,a,h0,runs,mean_I,std_I"; byte-identical
/// for identical specs.
std::string sweep_csv(const SweepResult& result);

struct ZooPoint {
  std::string model;
  double degree_gini = 0;
  double I = 0;
};

/// Structure-versus-function landscape over a fixed model zoo at n = 50:
/// complete, ring, path, star, Erdos-Renyi(p = 0.15), Watts-Strogatz(k = 4,
/// p = 0.1), Barabasi-Albert(m = 3). Random models draw seeds seed, seed+1,
/// seed+2 in that order.
std::vector<ZooPoint> zoo_landscape(Seed seed, const QoSProfile& profile);

/// CSV with header "model,degree_gini,I".
std::string zoo_csv(const std::vector<ZooPoint>& points);

struct WsComparisonRow {
  double p = 0;
  double mean_I = 0;
  double mean_jain_unfairness = 0;
  double mean_avg_path_length = 0;
  double mean_path_variance = 0;
};

/// Four metrics on identical Watts-Strogatz graphs and identical weight
/// multisets per run; means over `runs` seeded runs per grid point.
std::vector<WsComparisonRow> ws_metric_comparison(
    std::size_t n, std::size_t k, const std::vector<double>& p_grid,
    const QoSProfile& profile, std::size_t runs, Seed seed,
    unsigned threads = 0);

/// CSV with header
/// "p,mean_I,mean_jain_unfairness,mean_avg_path_length,mean_path_variance".
std::string ws_comparison_csv(const std::vector<WsComparisonRow>& rows);

struct BaReversalResult {
  double mean_I_strict = 0;  // h0 = 1
  double std_I_strict = 0;
  double mean_I_lenient = 0;  // h0 = 4
  double std_I_lenient = 0;
  /// Nonempty for degenerate statistics (runs == 1).
  std::string warning;
};

/// Paired evaluation of I on identical Barabasi-Albert graphs under a strict
/// (a = 2, h0 = 1) and a lenient (a = 2, h0 = 4) lens.
BaReversalResult ba_qos_reversal(std::size_t n, std::size_t m_attach,
                                 std::size_t runs, Seed seed,
                                 unsigned threads = 0);

/// CSV with header "h0,mean_I,std_I" (two rows: strict, lenient).
std::string ba_reversal_csv(const BaReversalResult& result);

/// count >= 2 logarithmically spaced values with exact endpoints;
/// preconditions: 0 < lo < hi.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// count >= 1 linearly spaced values with exact endpoints (count == 1
/// yields {lo}, requiring lo == hi).
std::vector<double> lin_spaced(double lo, double hi, std::size_t count);

}  // namespace netimb

#endif  // NETIMB_EXPERIMENTS_HPP_
