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

#include "netimb/imbalance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "netimb/classical.hpp"
#include "netimb/csv.hpp"
#include "netimb/errors.hpp"

namespace netimb {
namespace {

// w = 1 / (1 + e^x) through the exp(-|x|) branch: no overflow, full tail
// precision.
double sigmoid_of_negated(double x) noexcept {
  if (x >= 0.0) {
    const double t = std::exp(-x);
    return t / (1.0 + t);
  }
  return 1.0 / (1.0 + std::exp(x));
}

// ln w = -ln(1 + e^x), stable for any x.
double log_sigmoid_of_negated(double x) noexcept {
  if (x >= 0.0) return -x - std::log1p(std::exp(-x));
  return -std::log1p(std::exp(x));
}

double sigmoid_arg(hop_t d, const QoSProfile& q) noexcept {
  return q.steepness * (static_cast<double>(d) - q.hop_threshold);
}

// Scratch shared by the entropy and gradient paths: log-weights shifted so
// the largest is 0, their exponentials r_h = w_h / w_max, and
// S = sum(N_h * r_h) = W / w_max. S >= 2 always (the minimum-hop bin has
// r = 1), so nothing downstream can divide by an underflowed total.
struct NormalizedWeights {
  std::vector<double> log_r;  // aligned with hist.counts
  std::vector<double> r;
  double S = 0;
};

NormalizedWeights normalize_weights(const HopHistogram& hist,
                                    const QoSProfile& q) {
  NormalizedWeights nw;
  const std::size_t bins = hist.counts.size();
  nw.log_r.resize(bins);
  nw.r.resize(bins);
  double log_w_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bins; ++i) {
    nw.log_r[i] = log_sigmoid_of_negated(sigmoid_arg(hist.counts[i].first, q));
    log_w_max = std::max(log_w_max, nw.log_r[i]);
  }
  for (std::size_t i = 0; i < bins; ++i) {
    nw.log_r[i] -= log_w_max;
    nw.r[i] = std::exp(nw.log_r[i]);
    nw.S += static_cast<double>(hist.counts[i].second) * nw.r[i];
  }
  return nw;
}

std::size_t edge_count_of(const HopHistogram& hist) {
  // N_1 counts ordered adjacent pairs, so m = N_1 / 2.
  if (!hist.counts.empty() && hist.counts.front().first == 1) {
    return static_cast<std::size_t>(hist.counts.front().second / 2);
  }
  return 0;
}

}  // namespace

QoSProfile::QoSProfile(double steepness_in, double hop_threshold_in)
    : steepness(steepness_in), hop_threshold(hop_threshold_in) {
  if (!(std::isfinite(steepness) && steepness > 0.0)) {
    throw std::invalid_argument("QoSProfile: steepness must be finite and > 0");
  }
  if (!(std::isfinite(hop_threshold) && hop_threshold > 0.0)) {
    throw std::invalid_argument(
        "QoSProfile: hop_threshold must be finite and > 0");
  }
}

double weight(hop_t d, const QoSProfile& profile) noexcept {
  if (d == kUnreachable) return 0.0;
  return sigmoid_of_negated(sigmoid_arg(d, profile));
}

ImbalanceReport imbalance_from_histogram(const HopHistogram& hist,
                                         const QoSProfile& profile) {
  if (hist.n < 2) {
    throw std::invalid_argument("imbalance: need n >= 2");
  }
  ImbalanceReport rep;
  rep.n = hist.n;
  rep.m = edge_count_of(hist);
  rep.a = profile.steepness;
  rep.h0 = profile.hop_threshold;
  rep.Hmax = std::log2(static_cast<double>(hist.ordered_pairs()));
  for (const auto& [h, count] : hist.counts) {
    rep.per_hop_weight[h] = weight(h, profile);
  }

  if (hist.counts.empty()) {
    // No reachable pair: total weight is zero and imbalance is maximal by
    // definition.
    rep.W = 0.0;
    rep.H = 0.0;
    rep.Q = 0.0;
    rep.I = 1.0;
    return rep;
  }

  const NormalizedWeights nw = normalize_weights(hist, profile);
  // H = -sum(N_h p_h log2 p_h) with p_h = r_h / S collapses to
  // log2(S) - sum(N_h r_h ln r_h) / (S ln 2). A single-bin histogram gives
  // exactly H = log2(n(n-1)) and thus I = 0 for every profile.
  double weighted_log = 0.0;
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    weighted_log +=
        static_cast<double>(hist.counts[i].second) * nw.r[i] * nw.log_r[i];
  }
  rep.H = std::log2(nw.S) - weighted_log / (nw.S * std::numbers::ln2);
  rep.Q = std::clamp(rep.H / rep.Hmax, 0.0, 1.0);
  rep.I = 1.0 - rep.Q;

  double W = 0.0;
  for (const auto& [h, count] : hist.counts) {
    W += static_cast<double>(count) * weight(h, profile);
  }
  rep.W = W;
  return rep;
}

ImbalanceReport imbalance(const Graph& g, const QoSProfile& profile,
                          unsigned threads) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("imbalance: need n >= 2");
  }
  return imbalance_from_histogram(all_pairs_histogram(g, threads), profile);
}

WeightGradient weight_gradient(hop_t d, const QoSProfile& profile) {
  if (d == kUnreachable) {
    throw std::invalid_argument("weight_gradient: hop must be finite");
  }
  const double x = sigmoid_arg(d, profile);
  const double w = sigmoid_of_negated(x);
  const double one_minus_w = sigmoid_of_negated(-x);
  const double ww = w * one_minus_w;
  return {-(static_cast<double>(d) - profile.hop_threshold) * ww,
          profile.steepness * ww};
}

ImbalanceGradient imbalance_gradient(const HopHistogram& hist,
                                     const QoSProfile& profile) {
  if (hist.n < 2) {
    throw std::invalid_argument("imbalance_gradient: need n >= 2");
  }
  if (hist.counts.empty()) {
    throw metric_error(
        "imbalance gradient undefined: no reachable pair (W = 0)");
  }
  const NormalizedWeights nw = normalize_weights(hist, profile);
  const double log2_S = std::log2(nw.S);
  const std::size_t bins = hist.counts.size();

  // With p_h = w_h / W: dp_h/dt = p_h (g_h - A) for g_h = dln(w_h)/dt and
  // A = sum(N_h p_h g_h); then dH/dt = -sum(N_h p_h (g_h - A) log2 p_h) and
  // dI/dt = -dH/dt / Hmax. Log-derivatives of the sigmoid:
  //   dln(w)/da = -(d - h0) (1 - w),  dln(w)/dh0 = a (1 - w).
  std::vector<double> p(bins), log2_p(bins), ga(bins), gh0(bins);
  double Aa = 0.0, Ah0 = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    const auto [h, count] = hist.counts[i];
    p[i] = nw.r[i] / nw.S;
    log2_p[i] = nw.log_r[i] / std::numbers::ln2 - log2_S;
    const double x = sigmoid_arg(h, profile);
    const double one_minus_w = sigmoid_of_negated(-x);
    ga[i] = -(static_cast<double>(h) - profile.hop_threshold) * one_minus_w;
    gh0[i] = profile.steepness * one_minus_w;
    const double np = static_cast<double>(count) * p[i];
    Aa += np * ga[i];
    Ah0 += np * gh0[i];
  }
  double dH_da = 0.0, dH_dh0 = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    if (p[i] == 0.0) continue;  // fully underflowed tail: true term is ~0
    const double np = static_cast<double>(hist.counts[i].second) * p[i];
    dH_da -= np * (ga[i] - Aa) * log2_p[i];
    dH_dh0 -= np * (gh0[i] - Ah0) * log2_p[i];
  }
  const double hmax = std::log2(static_cast<double>(hist.ordered_pairs()));
  return {-dH_da / hmax, -dH_dh0 / hmax};
}

double concentrated_limit(std::uint64_t k, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("concentrated_limit: need n >= 2");
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  if (k < 2 || k > pairs) {
    throw std::invalid_argument(
        "concentrated_limit: need 2 <= k <= n(n-1)");
  }
  return 1.0 - std::log2(static_cast<double>(k)) /
                   std::log2(static_cast<double>(pairs));
}

double sup_imbalance(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("sup_imbalance: need n >= 2");
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return 1.0 - 1.0 / std::log2(pairs);
}

double mohar_sufficient_h0(const Graph& g) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("mohar_sufficient_h0: need n >= 2");
  }
  if (!is_connected(g)) {
    throw metric_error("mohar_sufficient_h0: graph is not connected");
  }
  const double lambda2 = algebraic_connectivity(g);
  const double bound =
      2.0 * std::log(static_cast<double>(g.node_count() - 1)) / lambda2;
  return std::ceil(bound) + 1.0;
}

std::vector<std::vector<double>> phase_diagram(const Graph& g,
                                               std::span<const double> a_grid,
                                               std::span<const double> h0_grid,
                                               unsigned threads) {
  if (a_grid.empty() || h0_grid.empty()) {
    throw std::invalid_argument("phase_diagram: grids must be nonempty");
  }
  for (const double a : a_grid) {
    if (!(std::isfinite(a) && a > 0)) {
      throw std::invalid_argument("phase_diagram: a values must be > 0");
    }
  }
  for (const double h0 : h0_grid) {
    if (!(std::isfinite(h0) && h0 > 0)) {
      throw std::invalid_argument("phase_diagram: h0 values must be > 0");
    }
  }
  const HopHistogram hist = all_pairs_histogram(g, threads);
  std::vector<std::vector<double>> values(h0_grid.size(),
                                          std::vector<double>(a_grid.size()));
  for (std::size_t i = 0; i < h0_grid.size(); ++i) {
    for (std::size_t j = 0; j < a_grid.size(); ++j) {
      values[i][j] =
          imbalance_from_histogram(hist, QoSProfile(a_grid[j], h0_grid[i])).I;
    }
  }
  return values;
}

std::string phase_diagram_csv(std::span<const double> a_grid,
                              std::span<const double> h0_grid,
                              const std::vector<std::vector<double>>& values) {
  std::string out = "h0,a,I\n";
  for (std::size_t i = 0; i < h0_grid.size(); ++i) {
    for (std::size_t j = 0; j < a_grid.size(); ++j) {
      out += fmt_double(h0_grid[i]);
      out += ',';
      out += fmt_double(a_grid[j]);
      out += ',';
      out += fmt_double(values[i][j]);
      out += '\n';
    }
  }
  return out;
}

std::string to_csv_row(const ImbalanceReport& report) {
  std::string out = std::to_string(report.n);
  out += ',';
  out += std::to_string(report.m);
  for (const double v :
       {report.a, report.h0, report.W, report.H, report.Q, report.I}) {
    out += ',';
    out += fmt_double(v);
  }
  return out;
}

}  // namespace netimb
