#include "pcube/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pcube/errors.hpp"

namespace pcube {

using nlohmann::ordered_json;

std::string representation_to_json(const Poset& p, const Representation& r) {
  require_valid(p, r, "representation_to_json");
  ordered_json out;
  out["ground"] = r.ground;
  ordered_json sets = ordered_json::object();
  for (int x = 0; x < p.size(); ++x) {
    ordered_json members = ordered_json::array();
    Mask m = r.sets[static_cast<size_t>(x)];
    for (int j = 0; j < r.ground_size(); ++j)
      if (m >> j & 1) members.push_back(r.ground[static_cast<size_t>(j)]);
    sets[p.label(x)] = std::move(members);
  }
  out["sets"] = std::move(sets);
  return out.dump(2) + "\n";
}

Representation representation_from_json(const Poset& p, const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw parse_error(std::string("representation json: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("representation json: top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "ground" && it.key() != "sets")
      throw parse_error("representation json: unknown key '" + it.key() + "'");
  if (!j.contains("ground") || !j["ground"].is_array())
    throw parse_error("representation json: missing \"ground\" array");
  if (!j.contains("sets") || !j["sets"].is_object())
    throw parse_error("representation json: missing \"sets\" object");

  Representation r;
  std::map<std::string, int> ground_index;
  for (const auto& g : j["ground"]) {
    if (!g.is_string()) throw parse_error("representation json: ground labels must be strings");
    std::string lab = g.get<std::string>();
    if (lab.empty()) throw parse_error("representation json: empty ground label");
    if (!ground_index.emplace(lab, static_cast<int>(r.ground.size())).second)
      throw parse_error("representation json: duplicate ground label '" + lab + "'");
    r.ground.push_back(std::move(lab));
  }
  if (r.ground_size() > kGroundCap)
    throw parse_error("representation json: more than 64 ground labels");

  const auto& sets = j["sets"];
  r.sets.assign(static_cast<size_t>(p.size()), 0);
  std::set<std::string> seen;
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    int x = p.index_of(it.key());
    if (x < 0)
      throw parse_error("representation json: '" + it.key() + "' is not an element of the poset");
    if (!seen.insert(it.key()).second)
      throw parse_error("representation json: duplicate set for '" + it.key() + "'");
    if (!it.value().is_array())
      throw parse_error("representation json: set of '" + it.key() + "' must be an array");
    Mask m = 0;
    for (const auto& g : it.value()) {
      if (!g.is_string())
        throw parse_error("representation json: members of '" + it.key() + "' must be strings");
      auto gi = ground_index.find(g.get<std::string>());
      if (gi == ground_index.end())
        throw parse_error("representation json: '" + g.get<std::string>() +
                          "' in set of '" + it.key() + "' is not a ground label");
      Mask bit = Mask{1} << gi->second;
      if (m & bit)
        throw parse_error("representation json: duplicate member '" + g.get<std::string>() +
                          "' in set of '" + it.key() + "'");
      m |= bit;
    }
    r.sets[static_cast<size_t>(x)] = m;
  }
  for (int x = 0; x < p.size(); ++x)
    if (!seen.count(p.label(x)))
      throw parse_error("representation json: no set for element '" + p.label(x) + "'");

  Mask used = 0;
  for (Mask m : r.sets) used |= m;
  for (int j2 = 0; j2 < r.ground_size(); ++j2)
    if (!(used >> j2 & 1))
      throw parse_error("representation json: ground label '" +
                        r.ground[static_cast<size_t>(j2)] + "' is used by no set");
  return r;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::string to_dot(const Poset& p, const Representation* r) {
  if (r) require_valid(p, *r, "to_dot");
  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int x = 0; x < p.size(); ++x) {
    std::string text = p.label(x);
    if (r) {
      text += " {";
      bool first = true;
      Mask m = r->sets[static_cast<size_t>(x)];
      for (int j = 0; j < r->ground_size(); ++j)
        if (m >> j & 1) {
          if (!first) text += ",";
          text += r->ground[static_cast<size_t>(j)];
          first = false;
        }
      text += "}";
    }
    os << "  \"" << dot_escape(p.label(x)) << "\" [label=\"" << dot_escape(text) << "\"];\n";
  }
  std::vector<int> h = p.heights();
  int max_h = 0;
  for (int x = 0; x < p.size(); ++x) max_h = std::max(max_h, h[static_cast<size_t>(x)]);
  for (int level = 0; level <= max_h; ++level) {
    std::vector<int> at;
    for (int x = 0; x < p.size(); ++x)
      if (h[static_cast<size_t>(x)] == level) at.push_back(x);
    if (at.empty()) continue;
    os << "  { rank=same;";
    for (int x : at) os << " \"" << dot_escape(p.label(x)) << "\";";
    os << " }\n";
  }
  for (auto [x, y] : p.cover_pairs())
    os << "  \"" << dot_escape(p.label(x)) << "\" -> \"" << dot_escape(p.label(y)) << "\";\n";
  os << "}\n";
  return os.str();
}

} // namespace pcube
