#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "powcol/game.hpp"

namespace powcol {

// One JSON object per move, keys in this order:
//   {"i":1,"player":"A","v":2,"rule":"first","activated":[2]}
// rule is null for Bob's moves.

inline std::string to_trace_line(const MoveRecord& r) {
  nlohmann::ordered_json j;
  j["i"] = r.index;
  j["player"] = to_string(r.player);
  j["v"] = r.vertex;
  if (r.rule) {
    j["rule"] = to_string(*r.rule);
  } else {
    j["rule"] = nullptr;
  }
  j["activated"] = r.activated;
  return j.dump();
}

inline MoveRecord parse_trace_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("trace: ") + e.what());
  }
  try {
    MoveRecord r;
    r.index = j.at("i").get<int>();
    const auto player = j.at("player").get<std::string>();
    if (player != "A" && player != "B") throw InputError("trace: player must be \"A\" or \"B\"");
    r.player = player == "A" ? Player::alice : Player::bob;
    r.vertex = j.at("v").get<Vertex>();
    const auto& rule = j.at("rule");
    if (!rule.is_null()) {
      const auto tag = rule.get<std::string>();
      if (tag == "first") r.rule = Rule::first;
      else if (tag == "A1") r.rule = Rule::a1;
      else if (tag == "A2") r.rule = Rule::a2;
      else if (tag == "B") r.rule = Rule::b;
      else throw InputError("trace: unknown rule tag '" + tag + "'");
    }
    r.activated = j.at("activated").get<std::vector<Vertex>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("trace: ") + e.what());
  }
}

inline std::vector<MoveRecord> read_trace(std::istream& in) {
  std::vector<MoveRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_trace_line(line));
  }
  return out;
}

// Observer that streams every move to out.
inline MoveObserver trace_writer(std::ostream& out) {
  return [&out](const GameState&, const MoveRecord& r) { out << to_trace_line(r) << '\n'; };
}

// Rebuilds a position by applying records in order from the empty game.
inline GameState replay(const PowerView& p, const std::vector<MoveRecord>& records) {
  GameState s(p);
  for (const MoveRecord& r : records) s.apply(r.player, r.vertex, r.rule);
  return s;
}

}  // namespace powcol
