#pragma once

#include <json.hpp>

#include "grgraph/graph.hpp"

namespace grgraph::detail {

using nlohmann::ordered_json;

inline ordered_json to_json(const ExtendedInt& x) {
  if (x.is_infinite()) return "inf";
  return *x.value;
}

inline ordered_json to_json(const std::optional<std::size_t>& x) {
  if (!x) return nullptr;
  return *x;
}

inline ordered_json to_json(const GraphInvariants& inv) {
  ordered_json j;
  j["order"] = inv.order;
  j["size"] = inv.size;
  j["components"] = inv.components;
  j["connected"] = inv.flags.connected;
  j["diameter"] = to_json(inv.diameter);
  j["girth"] = to_json(inv.girth);
  j["clique_number"] = to_json(inv.clique_number);
  j["domination_number"] = to_json(inv.domination_number);
  j["degree_sequence"] = inv.degree_sequence;
  j["null"] = inv.flags.null;
  j["complete"] = inv.flags.complete;
  j["regular"] = inv.flags.regular;
  j["star"] = inv.flags.star;
  j["planar"] = to_string(inv.planar);
  return j;
}

}  // namespace grgraph::detail
