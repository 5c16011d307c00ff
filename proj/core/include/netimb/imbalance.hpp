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

#ifndef NETIMB_IMBALANCE_HPP_
#define NETIMB_IMBALANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "netimb/graph.hpp"
#include "netimb/hops.hpp"

namespace netimb {

/// The tunable QoS lens converting hop counts into connection-experience
/// weights: w(h) = 1 / (1 + exp(steepness * (h - hop_threshold))).
/// Both parameters must be finite and strictly positive (enforced here).
struct QoSProfile {
  QoSProfile(double steepness, double hop_threshold);

  double steepness;      // sigmoid slope, a > 0
  double hop_threshold;  // ideal hop count, h0 > 0
};

/// Full output of one imbalance evaluation.
///
/// Definitions, over all K = n(n-1) ordered node pairs:
///   W = sum of pair weights, H = Shannon entropy (bits) of the
///   weight-proportional distribution p = w/W, Hmax = log2(K),
///   Q = H / Hmax, I = 1 - Q.
/// Unreachable pairs carry weight 0 and contribute nothing to H (0*log 0 = 0)
/// but still count inside Hmax, so disconnection raises I. When no pair is
/// reachable, W = H = Q = 0 and I = 1 by definition.
struct ImbalanceReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double a = 0;   // profile steepness
  double h0 = 0;  // profile hop threshold
  double W = 0;
  double H = 0;
  double Hmax = 0;
  double Q = 0;
  double I = 1;
  std::map<hop_t, double> per_hop_weight;
};

/// Sigmoid weight of a hop value; exactly 0 for kUnreachable. Evaluated
/// through an exp(-|x|) branch, so it neither overflows nor loses the tail
/// for |steepness * (d - hop_threshold)| up to at least 700.
double weight(hop_t d, const QoSProfile& profile) noexcept;

/// Computes the report from a histogram (the graph itself is not needed).
/// The entropy is evaluated in a compressed per-hop form with max-normalized
/// log-space weights, which keeps K_n at exactly I = 0 for every profile and
/// is immune to weight underflow for extreme profiles (the reported W may
/// still underflow to 0; I is computed independently of it).
/// Throws std::invalid_argument when hist.n < 2.
ImbalanceReport imbalance_from_histogram(const HopHistogram& hist,
                                         const QoSProfile& profile);

/// Composition: imbalance_from_histogram(all_pairs_histogram(g), profile).
ImbalanceReport imbalance(const Graph& g, const QoSProfile& profile,
                          unsigned threads = 0);

struct WeightGradient {
  double dw_da = 0;
  double dw_dh0 = 0;
};

/// Analytic partials of the sigmoid weight at finite hop d:
///   dw/da  = -(d - h0) * w * (1 - w)
///   dw/dh0 = a * w * (1 - w)   (always positive)
WeightGradient weight_gradient(hop_t d, const QoSProfile& profile);

struct ImbalanceGradient {
  double dI_da = 0;
  double dI_dh0 = 0;
};

/// Analytic gradient of I with respect to the profile parameters, from the
/// same compressed histogram form. Matches central finite differences
/// (step 1e-5) to relative error below 1e-5 on non-degenerate inputs.
/// Throws metric_error when no pair is reachable (W = 0): the derivative
/// needs all weights strictly positive.
ImbalanceGradient imbalance_gradient(const HopHistogram& hist,
                                     const QoSProfile& profile);

/// Limit of I as steepness grows when weight concentrates uniformly on k of
/// the n(n-1) ordered pairs: 1 - log2(k) / log2(n(n-1)).
/// Preconditions: n >= 2, 2 <= k <= n(n-1).
double concentrated_limit(std::uint64_t k, std::size_t n);

/// Least upper bound of I over all graphs and profiles at size n:
/// 1 - 1/log2(n(n-1)); approaches 1 as n grows. Precondition: n >= 2.
double sup_imbalance(std::size_t n);

/// Smallest integer hop threshold above the spectral quantity
/// 2*ln(n-1)/lambda2, namely ceil(2*ln(n-1)/lambda2) + 1. Where that
/// quantity dominates the diameter (sparse families: paths, rings, stars,
/// small-world and attachment graphs), a large steepness at this threshold
/// collapses I toward 0. It is NOT a universal diameter bound: dense
/// well-connected graphs can have 2*ln(n-1)/lambda2 < diam (ER(45, 0.35)
/// reaches lambda2 = 8, threshold 2, diameter 3), leaving I visibly
/// positive. Throws metric_error for disconnected input.
double mohar_sufficient_h0(const Graph& g);

/// I over the cartesian grid, reusing one histogram (APSP runs once).
/// result[i][j] = I(a_grid[j], h0_grid[i]). Grids must be nonempty with all
/// values positive and finite.
std::vector<std::vector<double>> phase_diagram(const Graph& g,
                                               std::span<const double> a_grid,
                                               std::span<const double> h0_grid,
                                               unsigned threads = 0);

/// Long-form CSV of a phase diagram with header "h0,a,I" (h0 outer, a inner).
std::string phase_diagram_csv(std::span<const double> a_grid,
                              std::span<const double> h0_grid,
                              const std::vector<std::vector<double>>& values);

/// One CSV row "n,m,a,h0,W,H,Q,I" (17 significant digits); header available
/// as kReportCsvHeader.
inline constexpr const char* kReportCsvHeader = "n,m,a,h0,W,H,Q,I";
std::string to_csv_row(const ImbalanceReport& report);

}  // namespace netimb

#endif  // NETIMB_IMBALANCE_HPP_
