#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vee/convex.hpp"
#include "vee/matching.hpp"

namespace vee {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"branches":[..],"weight":[a,b]} or {"elements":N,"covers":[[x,y],..]} (+ optional "weight").
Poset parse_poset(const nlohmann::json& j);
Poset read_poset(const std::string& path_or_text);

// Vertex index or name (m, x1, y2, ...).
Vertex parse_vertex(const Poset& p, const nlohmann::json& j);
Support parse_support(const Poset& p, const nlohmann::json& j);
// "m,x1,x2", "[0,1,2]" or a JSON array.
Support parse_support_text(const Poset& p, const std::string& text);

// [[support, multiplicity], ...]; a bare support counts once.
Barcode parse_barcode(const Poset& p, const nlohmann::json& j);
Barcode read_barcode(const Poset& p, const std::string& path_or_text);

nlohmann::json support_json(const Support& s);
nlohmann::json barcode_json(const Barcode& b);
nlohmann::json matching_json(const Matching& m);

}  // namespace vee
