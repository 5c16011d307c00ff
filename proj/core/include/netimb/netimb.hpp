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

#ifndef NETIMB_NETIMB_HPP_
#define NETIMB_NETIMB_HPP_

// Umbrella header for the whole library.

#include "netimb/classical.hpp"
#include "netimb/csv.hpp"
#include "netimb/edge_list.hpp"
#include "netimb/errors.hpp"
#include "netimb/experiments.hpp"
#include "netimb/generators.hpp"
#include "netimb/graph.hpp"
#include "netimb/hops.hpp"
#include "netimb/imbalance.hpp"
#include "netimb/optimizer.hpp"
#include "netimb/parallel.hpp"

#endif  // NETIMB_NETIMB_HPP_
