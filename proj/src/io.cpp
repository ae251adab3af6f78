#include "vee/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vee {

namespace {

nlohmann::json load(const std::string& path_or_text) {
  std::string text = path_or_text;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(path_or_text);
    if (!in) throw ParseError("cannot open " + path_or_text);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

Weight parse_weight(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("weight must be [a,b]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Poset parse_poset(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("poset must be a JSON object");
  try {
    if (j.contains("branches")) {
      auto lengths = j.at("branches").get<std::vector<int>>();
      Weight w = j.contains("weight") ? parse_weight(j["weight"]) : Weight{};
      return build_nvee(lengths, w);
    }
    if (j.contains("elements")) {
      int n = j.at("elements").get<int>();
      std::vector<std::pair<Vertex, Vertex>> covers;
      for (const auto& c : j.value("covers", nlohmann::json::array())) {
        if (!c.is_array() || c.size() != 2) throw ParseError("cover must be [x,y]");
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
      }
      Poset p = Poset::from_covers(n, covers);
      if (j.contains("weight")) {
        auto v = validate_nvee(p);
        if (!v.ok) throw ParseError("weighted general poset is not an n-Vee: " + v.reason);
        return build_nvee(v.shape.branch_lengths, parse_weight(j["weight"]));
      }
      return p;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("poset needs \"branches\" or \"elements\"");
}

Poset read_poset(const std::string& path_or_text) { return parse_poset(load(path_or_text)); }

Vertex parse_vertex(const Poset& p, const nlohmann::json& j) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (v < 0 || v >= p.core_size()) throw ParseError("vertex out of range: " + std::to_string(v));
    return v;
  }
  if (j.is_string()) {
    auto name = j.get<std::string>();
    for (Vertex v = 0; v < p.core_size(); ++v)
      if (vertex_name(p, v) == name) return v;
    throw ParseError("unknown vertex " + name);
  }
  throw ParseError("vertex must be an index or a name");
}

Support parse_support(const Poset& p, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("support must be an array");
  Support s;
  for (const auto& v : j) s.push_back(parse_vertex(p, v));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || !is_convex_support(p, s)) throw ParseError("support is not convex");
  return s;
}

Support parse_support_text(const Poset& p, const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return parse_support(p, nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what());
    }
  }
  nlohmann::json arr = nlohmann::json::array();
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    if (std::all_of(tok.begin(), tok.end(), ::isdigit))
      arr.push_back(std::stoi(tok));
    else
      arr.push_back(tok);
  }
  return parse_support(p, arr);
}

Barcode parse_barcode(const Poset& p, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("barcode must be an array");
  Barcode b;
  for (const auto& e : j) {
    // [[support], mult] versus a bare support
    if (e.is_array() && e.size() == 2 && e[0].is_array() && e[1].is_number_integer()) {
      Support s = parse_support(p, e[0]);
      int k = e[1].get<int>();
      if (k < 0) throw ParseError("negative multiplicity");
      for (int i = 0; i < k; ++i) b.push_back(s);
    } else {
      b.push_back(parse_support(p, e));
    }
  }
  return b;
}

Barcode read_barcode(const Poset& p, const std::string& path_or_text) { return parse_barcode(p, load(path_or_text)); }

nlohmann::json support_json(const Support& s) { return s; }

nlohmann::json barcode_json(const Barcode& b) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [s, k] : collapse(b)) j.push_back({s, k});
  return j;
}

nlohmann::json matching_json(const Matching& m) {
  nlohmann::json j;
  j["eps"] = m.eps;
  j["pairs"] = nlohmann::json::array();
  for (size_t k = 0; k < m.pairs.size(); ++k) j["pairs"].push_back({m.pairs[k].first, m.pairs[k].second, m.d2[k]});
  return j;
}

}  // namespace vee
