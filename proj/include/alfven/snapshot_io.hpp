// Copyright 2026 The Alfven Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alfven/state.hpp"

namespace alfven {

/// Record layout is described in docs/snapshot_format.md. Every record starts
/// with the 8-byte magic "ALFVEN1\n"; a file is a sequence of records.
inline constexpr char kSnapshotMagic[] = "ALFVEN1\n";

void write_snapshot(std::ostream& out, const SpectralState& s);
/// Throws std::runtime_error on a bad magic, truncated record or inconsistent grid.
SpectralState read_snapshot(std::istream& in);

void write_snapshots(const std::string& path, const std::vector<SpectralState>& states);
std::vector<SpectralState> read_snapshots(const std::string& path);

}  // namespace alfven
