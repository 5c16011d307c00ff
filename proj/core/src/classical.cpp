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

#include "netimb/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

#include "netimb/csv.hpp"
#include "netimb/errors.hpp"

namespace netimb {
namespace {

void require_reachable(const HopHistogram& hist, const char* what) {
  if (hist.counts.empty()) {
    throw metric_error(std::string(what) + " undefined: no reachable pair");
  }
}

}  // namespace

double average_path_length(const HopHistogram& hist) {
  require_reachable(hist, "average path length");
  std::uint64_t pairs = 0, hops = 0;
  for (const auto& [h, count] : hist.counts) {
    pairs += count;
    hops += static_cast<std::uint64_t>(h) * count;
  }
  return static_cast<double>(hops) / static_cast<double>(pairs);
}

double path_variance(const HopHistogram& hist) {
  require_reachable(hist, "path variance");
  // Integer moment sums stay exact well past AS-graph scale.
  std::uint64_t pairs = 0, m1 = 0, m2 = 0;
  for (const auto& [h, count] : hist.counts) {
    const std::uint64_t hh = h;
    pairs += count;
    m1 += hh * count;
    m2 += hh * hh * count;
  }
  const double mean = static_cast<double>(m1) / static_cast<double>(pairs);
  return static_cast<double>(m2) / static_cast<double>(pairs) - mean * mean;
}

double jain_unfairness(const HopHistogram& hist, const QoSProfile& profile) {
  if (hist.n < 2) {
    throw std::invalid_argument("jain_unfairness: need n >= 2");
  }
  if (hist.counts.empty()) return 1.0;  // all K weights are zero
  // Max-normalized weights r = w / w_max keep both sums well away from
  // underflow; the w_max factors cancel in the ratio.
  const double K = static_cast<double>(hist.ordered_pairs());
  double log_w_max = -std::numeric_limits<double>::infinity();
  std::vector<double> log_w(hist.counts.size());
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double x = profile.steepness *
                     (static_cast<double>(hist.counts[i].first) -
                      profile.hop_threshold);
    log_w[i] = x >= 0 ? -x - std::log1p(std::exp(-x)) : -std::log1p(std::exp(x));
    log_w_max = std::max(log_w_max, log_w[i]);
  }
  double sum_r = 0.0, sum_r2 = 0.0;
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double r = std::exp(log_w[i] - log_w_max);
    const double count = static_cast<double>(hist.counts[i].second);
    sum_r += count * r;
    sum_r2 += count * r * r;
  }
  return 1.0 - (sum_r * sum_r) / (K * sum_r2);
}

double degree_gini(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) {
    throw std::invalid_argument("degree_gini: need n >= 1");
  }
  if (g.edge_count() == 0) {
    throw metric_error("degree gini undefined: zero total degree");
  }
  std::vector<std::uint64_t> degrees(n);
  for (std::size_t u = 0; u < n; ++u) {
    degrees[u] = g.degree(static_cast<node_t>(u));
  }
  std::sort(degrees.begin(), degrees.end());
  // sum_{i,j} |k_i - k_j| = 2 sum_i (2i - n + 1) k_(i) on the ascending
  // sequence, giving G = sum_i (2i - n + 1) k_(i) / (n sum k).
  std::int64_t weighted = 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += (2 * static_cast<std::int64_t>(i) -
                 static_cast<std::int64_t>(n) + 1) *
                static_cast<std::int64_t>(degrees[i]);
    total += degrees[i];
  }
  return static_cast<double>(weighted) /
         (static_cast<double>(n) * static_cast<double>(total));
}

double algebraic_connectivity(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) {
    throw std::invalid_argument("algebraic_connectivity: need n >= 2");
  }
  if (n > kLambda2NodeCap) {
    throw metric_error(
        "algebraic_connectivity: dense eigensolver capped at n = " +
        std::to_string(kLambda2NodeCap));
  }
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t u = 0; u < n; ++u) {
    laplacian(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u)) =
        static_cast<double>(g.degree(static_cast<node_t>(u)));
    for (const node_t v : g.neighbors(static_cast<node_t>(u))) {
      laplacian(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) =
          -1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw metric_error("algebraic_connectivity: eigensolver failed");
  }
  const double lambda2 = solver.eigenvalues()(1);  // ascending order
  // Roundoff on the zero eigenvalue of disconnected graphs lands within
  // +/- 1e-9; snap so lambda2 == 0 exactly iff disconnected.
  return lambda2 < 1e-9 ? 0.0 : lambda2;
}

ComparisonReport compare_metrics(const Graph& g, const QoSProfile& profile,
                                 unsigned threads) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("compare_metrics: need n >= 2");
  }
  const HopHistogram hist = all_pairs_histogram(g, threads);
  ComparisonReport rep;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  rep.a = profile.steepness;
  rep.h0 = profile.hop_threshold;
  rep.avg_path_length = average_path_length(hist);
  rep.path_variance = path_variance(hist);
  rep.jain_unfairness = jain_unfairness(hist, profile);
  rep.degree_gini = degree_gini(g);
  if (g.node_count() <= kLambda2NodeCap) {
    rep.lambda2 = algebraic_connectivity(g);
  }
  rep.reachable_fraction = static_cast<double>(hist.reachable_pairs()) /
                           static_cast<double>(hist.ordered_pairs());
  return rep;
}

std::string to_csv_row(const ComparisonReport& report) {
  std::string out = std::to_string(report.n);
  out += ',';
  out += std::to_string(report.m);
  for (const double v : {report.a, report.h0, report.avg_path_length,
                         report.path_variance, report.jain_unfairness,
                         report.degree_gini}) {
    out += ',';
    out += fmt_double(v);
  }
  out += ',';
  if (report.lambda2.has_value()) out += fmt_double(*report.lambda2);
  out += ',';
  out += fmt_double(report.reachable_fraction);
  return out;
}

}  // namespace netimb
