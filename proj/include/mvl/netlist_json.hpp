// Copyright 2026 The mvlbench Authors.
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

// Versioned JSON document for netlists (schema_version 1).

#include "json.hpp"
#include "mvl/netlist.hpp"

namespace mvl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Signals, gates with kinds, domains and per-gate costs, plus a summary
/// block with catalog/principled totals and depth.
Json netlist_to_json(const Netlist& netlist);

}  // namespace mvl
