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

#ifndef NETIMB_OPTIMIZER_HPP_
#define NETIMB_OPTIMIZER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "netimb/graph.hpp"
#include "netimb/imbalance.hpp"

namespace netimb {

struct CandidateScore {
  Edge edge;     // normalized u < v
  double I = 0;  // imbalance of the graph plus this edge
};

/// Scores every absent edge by full recomputation of I on g + edge, sorted
/// ascending by (I, edge). Candidates may be evaluated concurrently; the
/// ranking is identical for any worker count (ties are broken
/// lexicographically after all scores are gathered). Throws metric_error
/// when the graph is complete (no candidates).
std::vector<CandidateScore> evaluate_candidates(const Graph& g,
                                                const QoSProfile& profile,
                                                unsigned threads = 0);

struct OptimizationRound {
  std::size_t candidate_count = 0;
  Edge best_edge;
  double best_I = 0;  // imbalance after committing best_edge
};

struct OptimizationResult {
  std::vector<Edge> chosen_edges;  // in commit order
  double i_before = 0;
  double i_after = 0;
  std::vector<OptimizationRound> trace;  // one entry per committed round
  /// True when the candidate pool ran dry before the budget was spent; a
  /// partial result, not an error.
  bool exhausted = false;
  Graph final_graph;
};

/// Greedy minimization: each round scores all absent edges and commits the
/// lowest-I candidate (note I may legitimately rise: edge addition is not
/// monotone for this metric). Deterministic for fixed inputs.
/// Precondition: budget >= 1, g.node_count() >= 2.
OptimizationResult greedy_edge_addition(const Graph& g,
                                        const QoSProfile& profile,
                                        std::size_t budget,
                                        unsigned threads = 0);

/// CSV of the per-round trace with header "round,candidate_u,candidate_v,I"
/// (rounds are 1-based).
std::string trace_csv(const OptimizationResult& result);

}  // namespace netimb

#endif  // NETIMB_OPTIMIZER_HPP_
