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

#ifndef NETIMB_CSV_HPP_
#define NETIMB_CSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace netimb {

/// Shortest round-trippable decimal form ("%.17g"); used by every CSV
/// emitter so serialization is deterministic.
std::string fmt_double(double value);

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a partial file. Throws io_error on failure.
void write_file_atomic(const std::filesystem::path& file,
                       std::string_view content);

}  // namespace netimb

#endif  // NETIMB_CSV_HPP_
