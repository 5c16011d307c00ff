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

#ifndef NETIMB_CLASSICAL_HPP_
#define NETIMB_CLASSICAL_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "netimb/graph.hpp"
#include "netimb/hops.hpp"
#include "netimb/imbalance.hpp"

namespace netimb {

/// Classical comparison metrics evaluated on one graph.
struct ComparisonReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double a = 0;
  double h0 = 0;
  double avg_path_length = 0;   // over reachable ordered pairs
  double path_variance = 0;     // population variance of finite hops
  double jain_unfairness = 0;   // 1 - JFI over all ordered-pair weights
  double degree_gini = 0;
  /// Second-smallest Laplacian eigenvalue; nullopt above the dense-solver
  /// cap (kLambda2NodeCap).
  std::optional<double> lambda2;
  double reachable_fraction = 0;
};

/// Mean finite hop: sum(h * N_h) / sum(N_h). Throws metric_error when no
/// pair is reachable.
double average_path_length(const HopHistogram& hist);

/// Population variance of the finite-hop distribution weighted by N_h.
/// Throws metric_error when no pair is reachable.
double path_variance(const HopHistogram& hist);

/// Jain-style unfairness 1 - (sum w)^2 / (K * sum w^2) over the weight
/// multiset of all K = n(n-1) ordered pairs; unreachable pairs contribute
/// w = 0, mirroring the imbalance denominator convention so both metrics see
/// identical weight multisets. Returns 1 when every weight is 0. Evaluated
/// on max-normalized weights, so extreme profiles cannot underflow the
/// denominator. Throws std::invalid_argument when hist.n < 2.
double jain_unfairness(const HopHistogram& hist, const QoSProfile& profile);

/// Gini coefficient of the degree sequence,
/// sum_{i,j} |k_i - k_j| / (2 n sum_i k_i), via the sorted-sequence form.
/// Throws std::invalid_argument when n = 0 and metric_error when the graph
/// has no edges.
double degree_gini(const Graph& g);

/// Dense symmetric eigensolve of L = D - A is capped at this many nodes.
inline constexpr std::size_t kLambda2NodeCap = 2000;

/// Algebraic connectivity: second-smallest eigenvalue of the combinatorial
/// Laplacian, to absolute tolerance 1e-8; values below 1e-9 are snapped to 0
/// (exactly 0 iff disconnected). Throws std::invalid_argument when n < 2 and
/// metric_error above kLambda2NodeCap.
double algebraic_connectivity(const Graph& g);

/// Computes every comparison metric from one histogram pass; lambda2 is
/// skipped (nullopt) above kLambda2NodeCap instead of failing.
ComparisonReport compare_metrics(const Graph& g, const QoSProfile& profile,
                                 unsigned threads = 0);

/// CSV row matching kComparisonCsvHeader; lambda2 serializes as the empty
/// field when skipped.
inline constexpr const char* kComparisonCsvHeader =
    "n,m,a,h0,avg_path_length,path_variance,jain_unfairness,degree_gini,"
    "lambda2,reachable_fraction";
std::string to_csv_row(const ComparisonReport& report);

}  // namespace netimb

#endif  // NETIMB_CLASSICAL_HPP_
