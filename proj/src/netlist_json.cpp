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

#include "mvl/netlist_json.hpp"

namespace mvl {

Json netlist_to_json(const Netlist& netlist) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["radix"] = netlist.radix();

  Json signals = Json::array();
  for (std::size_t i = 0; i < netlist.signals().size(); ++i) {
    const auto& s = netlist.signals()[i];
    signals.push_back({{"id", i}, {"name", s.name}, {"domain", to_string(s.domain)}});
  }
  auto ids = [](auto refs) {
    Json a = Json::array();
    for (const auto& r : refs) a.push_back(r.id);
    return a;
  };
  doc["inputs"] = ids(netlist.inputs());
  doc["outputs"] = ids(netlist.outputs());
  doc["signals"] = std::move(signals);

  Json gates = Json::array();
  for (const auto& g : netlist.gates()) {
    Json j;
    j["kind"] = to_string(g.kind);
    j["label"] = g.label;
    j["inputs"] = ids(g.inputs);
    j["outputs"] = ids(g.outputs);
    if (g.kind == GateKind::complex_sop) {
      Json products = Json::array();
      for (const auto& term : g.products) products.push_back(ids(term));
      j["products"] = std::move(products);
      j["output_complemented"] = g.output_complemented;
    }
    j["cost_principled"] = principled_cost(g);
    j["cost_override"] = g.cost_override ? Json(*g.cost_override) : Json(nullptr);
    j["level_restoring"] = g.level_restoring();
    gates.push_back(std::move(j));
  }
  doc["gates"] = std::move(gates);

  doc["summary"] = {
      {"gate_count", netlist.gates().size()},
      {"transistors_catalog", transistor_count(netlist, CostMode::catalog)},
      {"transistors_principled", transistor_count(netlist, CostMode::principled)},
      {"depth", depth(netlist)},
  };
  return doc;
}

}  // namespace mvl
