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

#include "netimb/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "netimb/classical.hpp"
#include "netimb/csv.hpp"
#include "netimb/hops.hpp"
#include "netimb/parallel.hpp"

namespace netimb {
namespace {

const char* model_name(SweepModel model) {
  switch (model) {
    case SweepModel::kErdosRenyi:
      return "er";
    case SweepModel::kBarabasiAlbert:
      return "ba";
    case SweepModel::kWattsStrogatz:
      return "ws";
  }
  return "?";
}

// BA attachment counts arrive on the shared double-valued grid; anything
// non-integral is a caller mistake, not something to round silently.
std::size_t integral_param(double value, const char* what) {
  const double rounded = std::nearbyint(value);
  if (!(std::abs(value - rounded) < 1e-9) || rounded < 0) {
    throw std::invalid_argument(std::string(what) +
                                " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(rounded);
}

Graph generate_for(const SweepSpec& spec, double param, Seed seed) {
  switch (spec.model) {
    case SweepModel::kErdosRenyi:
      return erdos_renyi(spec.n, param, seed);
    case SweepModel::kBarabasiAlbert:
      return barabasi_albert(spec.n, integral_param(param, "ba sweep m"),
                             seed);
    case SweepModel::kWattsStrogatz:
      return watts_strogatz(spec.n, spec.ws_neighbors, param, seed);
  }
  throw std::invalid_argument("unknown sweep model");
}

struct MeanStd {
  double mean = 0;
  double std = 0;
};

// Sample standard deviation; 0 for a single value.
MeanStd mean_std(const std::vector<double>& values) {
  MeanStd ms;
  for (const double v : values) ms.mean += v;
  ms.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (const double v : values) ss += (v - ms.mean) * (v - ms.mean);
    ms.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return ms;
}

}  // namespace

std::vector<QoSProfile> default_sweep_profiles() {
  return {QoSProfile(1.0, 4.0), QoSProfile(2.0, 3.0), QoSProfile(0.5, 6.0)};
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  if (spec.param_grid.empty()) {
    throw std::invalid_argument("run_sweep: empty parameter grid");
  }
  if (spec.profiles.empty()) {
    throw std::invalid_argument("run_sweep: no profiles");
  }
  if (spec.runs < 1) {
    throw std::invalid_argument("run_sweep: runs must be >= 1");
  }

  const std::size_t grid = spec.param_grid.size();
  const std::size_t profiles = spec.profiles.size();
  const std::size_t tasks = grid * spec.runs;

  // One graph + histogram per (grid point, run), shared by all profiles so
  // profile comparisons are paired. Slot writes keep the result independent
  // of scheduling; aggregation below runs in (grid, profile, run) order.
  std::vector<std::vector<double>> task_values(
      tasks, std::vector<double>(profiles, 0.0));
  parallel_for_blocks(
      tasks, resolve_thread_count(threads), 1,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          const std::size_t gi = t / spec.runs;
          const std::size_t run = t % spec.runs;
          const Graph g = generate_for(spec, spec.param_grid[gi],
                                       spec.base_seed + run);
          const HopHistogram hist = all_pairs_histogram(g, 1);
          for (std::size_t pi = 0; pi < profiles; ++pi) {
            task_values[t][pi] =
                imbalance_from_histogram(hist, spec.profiles[pi]).I;
          }
        }
      });

  SweepResult result;
  result.spec = spec;
  result.points.reserve(grid * profiles);
  for (std::size_t gi = 0; gi < grid; ++gi) {
    for (std::size_t pi = 0; pi < profiles; ++pi) {
      SweepPoint point;
      point.param = spec.param_grid[gi];
      point.a = spec.profiles[pi].steepness;
      point.h0 = spec.profiles[pi].hop_threshold;
      point.run_values.reserve(spec.runs);
      for (std::size_t run = 0; run < spec.runs; ++run) {
        point.run_values.push_back(task_values[gi * spec.runs + run][pi]);
      }
      const MeanStd ms = mean_std(point.run_values);
      point.mean_I = ms.mean;
      point.std_I = ms.std;
      result.points.push_back(std::move(point));
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "model,n,param,a,h0,runs,mean_I,std_I\n";
  for (const SweepPoint& point : result.points) {
    out += model_name(result.spec.model);
    out += ',';
    out += std::to_string(result.spec.n);
    out += ',';
    out += fmt_double(point.param);
    out += ',';
    out += fmt_double(point.a);
    out += ',';
    out += fmt_double(point.h0);
    out += ',';
    out += std::to_string(result.spec.runs);
    out += ',';
    out += fmt_double(point.mean_I);
    out += ',';
    out += fmt_double(point.std_I);
    out += '\n';
  }
  return out;
}

std::vector<ZooPoint> zoo_landscape(Seed seed, const QoSProfile& profile) {
  constexpr std::size_t n = 50;
  std::vector<std::pair<std::string, Graph>> models;
  models.emplace_back("complete", complete(n));
  models.emplace_back("ring", ring(n));
  models.emplace_back("path", path(n));
  models.emplace_back("star", star(n));
  models.emplace_back("er", erdos_renyi(n, 0.15, seed));
  models.emplace_back("ws", watts_strogatz(n, 4, 0.1, seed + 1));
  models.emplace_back("ba", barabasi_albert(n, 3, seed + 2));

  std::vector<ZooPoint> points;
  points.reserve(models.size());
  for (const auto& [name, graph] : models) {
    points.push_back(
        {name, degree_gini(graph), imbalance(graph, profile, 1).I});
  }
  return points;
}

std::string zoo_csv(const std::vector<ZooPoint>& points) {
  std::string out = "model,degree_gini,I\n";
  for (const ZooPoint& point : points) {
    out += point.model;
    out += ',';
    out += fmt_double(point.degree_gini);
    out += ',';
    out += fmt_double(point.I);
    out += '\n';
  }
  return out;
}

std::vector<WsComparisonRow> ws_metric_comparison(
    std::size_t n, std::size_t k, const std::vector<double>& p_grid,
    const QoSProfile& profile, std::size_t runs, Seed seed, unsigned threads) {
  if (p_grid.empty()) {
    throw std::invalid_argument("ws_metric_comparison: empty p grid");
  }
  if (runs < 1) {
    throw std::invalid_argument("ws_metric_comparison: runs must be >= 1");
  }

  struct Sample {
    double I, jain, apl, var;
  };
  const std::size_t tasks = p_grid.size() * runs;
  std::vector<Sample> samples(tasks);
  parallel_for_blocks(tasks, resolve_thread_count(threads), 1,
                      [&](std::size_t begin, std::size_t end) {
                        for (std::size_t t = begin; t < end; ++t) {
                          const std::size_t gi = t / runs;
                          const std::size_t run = t % runs;
                          const Graph g = watts_strogatz(
                              n, k, p_grid[gi], seed + run);
                          const HopHistogram hist = all_pairs_histogram(g, 1);
                          samples[t] = {
                              imbalance_from_histogram(hist, profile).I,
                              jain_unfairness(hist, profile),
                              average_path_length(hist),
                              path_variance(hist)};
                        }
                      });

  std::vector<WsComparisonRow> rows;
  rows.reserve(p_grid.size());
  for (std::size_t gi = 0; gi < p_grid.size(); ++gi) {
    WsComparisonRow row;
    row.p = p_grid[gi];
    for (std::size_t run = 0; run < runs; ++run) {
      const Sample& s = samples[gi * runs + run];
      row.mean_I += s.I;
      row.mean_jain_unfairness += s.jain;
      row.mean_avg_path_length += s.apl;
      row.mean_path_variance += s.var;
    }
    const double r = static_cast<double>(runs);
    row.mean_I /= r;
    row.mean_jain_unfairness /= r;
    row.mean_avg_path_length /= r;
    row.mean_path_variance /= r;
    rows.push_back(row);
  }
  return rows;
}

std::string ws_comparison_csv(const std::vector<WsComparisonRow>& rows) {
  std::string out =
      "p,mean_I,mean_jain_unfairness,mean_avg_path_length,"
      "mean_path_variance\n";
  for (const WsComparisonRow& row : rows) {
    out += fmt_double(row.p);
    out += ',';
    out += fmt_double(row.mean_I);
    out += ',';
    out += fmt_double(row.mean_jain_unfairness);
    out += ',';
    out += fmt_double(row.mean_avg_path_length);
    out += ',';
    out += fmt_double(row.mean_path_variance);
    out += '\n';
  }
  return out;
}

BaReversalResult ba_qos_reversal(std::size_t n, std::size_t m_attach,
                                 std::size_t runs, Seed seed,
                                 unsigned threads) {
  if (runs < 1) {
    throw std::invalid_argument("ba_qos_reversal: runs must be >= 1");
  }
  const QoSProfile strict(2.0, 1.0);
  const QoSProfile lenient(2.0, 4.0);

  std::vector<double> strict_values(runs), lenient_values(runs);
  parallel_for_blocks(runs, resolve_thread_count(threads), 1,
                      [&](std::size_t begin, std::size_t end) {
                        for (std::size_t run = begin; run < end; ++run) {
                          const Graph g =
                              barabasi_albert(n, m_attach, seed + run);
                          const HopHistogram hist = all_pairs_histogram(g, 1);
                          strict_values[run] =
                              imbalance_from_histogram(hist, strict).I;
                          lenient_values[run] =
                              imbalance_from_histogram(hist, lenient).I;
                        }
                      });

  BaReversalResult result;
  const MeanStd s = mean_std(strict_values);
  const MeanStd l = mean_std(lenient_values);
  result.mean_I_strict = s.mean;
  result.std_I_strict = s.std;
  result.mean_I_lenient = l.mean;
  result.std_I_lenient = l.std;
  if (runs == 1) {
    result.warning = "single run: standard deviations degenerate to 0";
  }
  return result;
}

std::string ba_reversal_csv(const BaReversalResult& result) {
  std::string out = "h0,mean_I,std_I\n";
  out += "1," + fmt_double(result.mean_I_strict) + ',' +
         fmt_double(result.std_I_strict) + '\n';
  out += "4," + fmt_double(result.mean_I_lenient) + ',' +
         fmt_double(result.std_I_lenient) + '\n';
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi > lo)) {
    throw std::invalid_argument("log_spaced: need 0 < lo < hi");
  }
  if (count < 2) {
    throw std::invalid_argument("log_spaced: need count >= 2");
  }
  std::vector<double> values(count);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::exp(log_lo + (log_hi - log_lo) *
                                      static_cast<double>(i) /
                                      static_cast<double>(count - 1));
  }
  values.front() = lo;  // exact endpoints
  values.back() = hi;
  return values;
}

std::vector<double> lin_spaced(double lo, double hi, std::size_t count) {
  if (count < 1) {
    throw std::invalid_argument("lin_spaced: need count >= 1");
  }
  if (count == 1) {
    if (lo != hi) {
      throw std::invalid_argument("lin_spaced: count 1 requires lo == hi");
    }
    return {lo};
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("lin_spaced: need lo < hi");
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(count - 1);
  }
  values.front() = lo;
  values.back() = hi;
  return values;
}

}  // namespace netimb
