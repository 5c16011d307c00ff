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

#ifndef NETIMB_PARALLEL_HPP_
#define NETIMB_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace netimb {

/// Number of hardware threads, at least 1.
unsigned hardware_threads() noexcept;

/// Default worker count: the NETIMB_THREADS environment variable when set to
/// a positive integer, otherwise hardware_threads().
unsigned default_thread_count();

/// Resolves a user-supplied thread count: 0 means "use the default".
unsigned resolve_thread_count(unsigned requested);

/// Runs `fn(begin, end)` over [0, count) split into blocks of `block_size`,
/// using up to `threads` workers. Blocks are claimed dynamically; callers
/// must make `fn` thread-safe and order-independent. Exceptions thrown by
/// `fn` are rethrown on the calling thread (first one wins). With
/// `threads <= 1` the loop runs inline.
void parallel_for_blocks(std::size_t count, unsigned threads,
                         std::size_t block_size,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace netimb

#endif  // NETIMB_PARALLEL_HPP_
