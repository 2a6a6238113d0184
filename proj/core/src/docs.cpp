// Copyright 2026 The offnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "offnash/docs.hpp"

#include <limits>
#include <utility>

#include <json.hpp>

namespace offnash::docs {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void rethrow_parse(const std::string& text,
                               const nlohmann::json::parse_error& e) {
  int line = 1, col = 1;
  const std::size_t stop =
      std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw parse_error(e.what(), line, col);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_parse(text, e);
  }
}

void expect_keys(const Json& obj, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional,
                 const std::string& what) {
  if (!obj.is_object()) throw semantic_error(what + ": expected an object");
  for (const auto& key : required)
    if (!obj.contains(key))
      throw semantic_error(what + ": missing field \"" + key + "\"");
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known)
      throw semantic_error(what + ": unknown field \"" + key + "\"");
  }
}

Rational payoff_from(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number())
    throw semantic_error(what + ": decimal payoffs are not accepted; use \"p/q\"");
  if (v.is_string()) {
    auto r = parse_rational(v.get<std::string>());
    if (!r) throw semantic_error(what + ": bad rational \"" +
                                 v.get<std::string>() + "\"");
    return *r;
  }
  throw semantic_error(what + ": payoff must be an integer or a \"p/q\" string");
}

Json payoff_to(const Rational& r) {
  if (denominator(r) == 1 &&
      r >= std::numeric_limits<long long>::min() &&
      r <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(numerator(r)));
  }
  return Json(to_string(r));
}

Matrix matrix_from(const Json& v, int rows, int cols, const std::string& what) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    throw semantic_error(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m;
  for (const Json& row : v) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw semantic_error(what + ": expected " + std::to_string(cols) +
                           " entries per row");
    std::vector<Rational> out;
    for (const Json& cell : row) out.push_back(payoff_from(cell, what));
    m.push_back(std::move(out));
  }
  return m;
}

std::vector<std::string> labels_from(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty())
    throw semantic_error(what + ": expected a non-empty array of labels");
  std::vector<std::string> out;
  for (const Json& item : v) {
    if (!item.is_string())
      throw semantic_error(what + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json strategy_to(const MixedStrategy& s) {
  Json out = Json::array();
  for (const Rational& p : s.probs) out.push_back(payoff_to(p));
  return out;
}

MixedStrategy strategy_from(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty())
    throw semantic_error(what + ": expected a probability array");
  MixedStrategy s;
  for (const Json& cell : v) s.probs.push_back(payoff_from(cell, what));
  return s;
}

const char* boundary_name(decide::DeltaLabel::Boundary b) {
  switch (b) {
    case decide::DeltaLabel::Boundary::none: return "none";
    case decide::DeltaLabel::Boundary::pp_mp: return "pp-mp";
    case decide::DeltaLabel::Boundary::mp_mm: return "mp-mm";
  }
  return "none";
}

Json game_to_json(const StageGame& g) {
  Json doc;
  doc["rows"] = g.row_labels;
  doc["cols"] = g.col_labels;
  Json u1 = Json::array(), u2 = Json::array();
  for (int i = 0; i < g.rows; ++i) {
    Json r1 = Json::array(), r2 = Json::array();
    for (int j = 0; j < g.cols; ++j) {
      r1.push_back(payoff_to(g.u1[i][j]));
      r2.push_back(payoff_to(g.u2[i][j]));
    }
    u1.push_back(std::move(r1));
    u2.push_back(std::move(r2));
  }
  doc["u1"] = std::move(u1);
  doc["u2"] = std::move(u2);
  return doc;
}

Json evidence_to_json(const StageGame& g, const decide::Evidence& e) {
  Json out;
  if (std::holds_alternative<decide::OffProfile>(e)) {
    const auto& p = std::get<decide::OffProfile>(e);
    out["kind"] = "off_profile";
    out["row"] = g.row_labels[p.row];
    out["col"] = g.col_labels[p.col];
  } else if (std::holds_alternative<decide::RowThreat>(e)) {
    const auto& t = std::get<decide::RowThreat>(e);
    out["kind"] = "row_threat";
    out["row"] = g.row_labels[t.row];
    out["better_row"] = g.row_labels[t.better_row];
    out["col"] = g.col_labels[t.col];
  } else if (std::holds_alternative<decide::ColThreat>(e)) {
    const auto& t = std::get<decide::ColThreat>(e);
    out["kind"] = "col_threat";
    out["row"] = g.row_labels[t.row];
    out["col"] = g.col_labels[t.col];
    out["better_col"] = g.col_labels[t.better_col];
  } else if (std::holds_alternative<decide::MixedRowThreat>(e)) {
    const auto& t = std::get<decide::MixedRowThreat>(e);
    out["kind"] = "mixed_row_threat";
    out["sigma1"] = strategy_to(t.sigma1);
    out["col"] = g.col_labels[t.col];
    out["bad_row"] = g.row_labels[t.bad_row];
    if (t.anchor >= 0) out["anchor"] = g.row_labels[t.anchor];
  } else if (std::holds_alternative<decide::MixedColThreat>(e)) {
    const auto& t = std::get<decide::MixedColThreat>(e);
    out["kind"] = "mixed_col_threat";
    out["sigma2"] = strategy_to(t.sigma2);
    out["row"] = g.row_labels[t.row];
    out["bad_col"] = g.col_labels[t.bad_col];
    if (t.anchor >= 0) out["anchor"] = g.col_labels[t.anchor];
  } else {
    out = nullptr;
  }
  return out;
}

Json values_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

Json summary_to_json(const nash::VSummary& v) {
  Json out;
  out["empty"] = v.empty;
  out["v1"] = Json::object();
  out["v2"] = Json::object();
  out["v1"]["values"] = values_to_json(v.v1_values);
  out["v2"]["values"] = values_to_json(v.v2_values);
  if (!v.empty) {
    out["v1"]["unique"] = v.v1_unique;
    out["v1"]["min"] = to_string(v.v1_min);
    out["v1"]["max"] = to_string(v.v1_max);
    out["v2"]["unique"] = v.v2_unique;
    out["v2"]["min"] = to_string(v.v2_min);
    out["v2"]["max"] = to_string(v.v2_max);
  }
  return out;
}

Json machine_to_json(const witness::StrategyMachine& m) {
  Json doc;
  doc["horizon"] = m.horizon;
  doc["start"] = m.start;
  Json states = Json::array();
  for (const auto& st : m.states) {
    Json s;
    s["emit"] = Json::object();
    s["emit"]["row"] = strategy_to(st.emit.s1);
    s["emit"]["col"] = strategy_to(st.emit.s2);
    Json transitions = Json::array();
    for (const auto& tr : st.transitions) {
      Json t;
      if (tr.on.rows) t["rows"] = *tr.on.rows;
      if (tr.on.cols) t["cols"] = *tr.on.cols;
      t["next"] = tr.next;
      transitions.push_back(std::move(t));
    }
    s["transitions"] = std::move(transitions);
    states.push_back(std::move(s));
  }
  doc["states"] = std::move(states);
  return doc;
}

std::string dump(const Json& doc, bool pretty) {
  return pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
}

}  // namespace

StageGame parse_game(const std::string& text) {
  Json doc = parse_json(text);
  expect_keys(doc, {"rows", "cols", "u1", "u2"}, {}, "game");
  auto row_labels = labels_from(doc["rows"], "game.rows");
  auto col_labels = labels_from(doc["cols"], "game.cols");
  const int rows = static_cast<int>(row_labels.size());
  const int cols = static_cast<int>(col_labels.size());
  Matrix u1 = matrix_from(doc["u1"], rows, cols, "game.u1");
  Matrix u2 = matrix_from(doc["u2"], rows, cols, "game.u2");
  try {
    return make_game(std::move(u1), std::move(u2), std::move(row_labels),
                     std::move(col_labels));
  } catch (const input_error& e) {
    throw semantic_error(e.what());
  }
}

std::string serialize_game(const StageGame& g) { return game_to_json(g).dump(); }

witness::StrategyMachine parse_machine(const std::string& text) {
  Json doc = parse_json(text);
  expect_keys(doc, {"horizon", "start", "states"}, {}, "machine");
  witness::StrategyMachine m;
  if (!doc["horizon"].is_number_integer())
    throw semantic_error("machine.horizon: expected an integer");
  m.horizon = doc["horizon"].get<long>();
  if (!doc["start"].is_number_integer())
    throw semantic_error("machine.start: expected an integer");
  m.start = doc["start"].get<int>();
  if (!doc["states"].is_array() || doc["states"].empty())
    throw semantic_error("machine.states: expected a non-empty array");
  for (const Json& s : doc["states"]) {
    expect_keys(s, {"emit", "transitions"}, {}, "machine state");
    expect_keys(s["emit"], {"row", "col"}, {}, "machine emit");
    witness::MachineState state;
    state.emit.s1 = strategy_from(s["emit"]["row"], "machine emit.row");
    state.emit.s2 = strategy_from(s["emit"]["col"], "machine emit.col");
    if (!s["transitions"].is_array())
      throw semantic_error("machine transitions: expected an array");
    for (const Json& t : s["transitions"]) {
      expect_keys(t, {"next"}, {"rows", "cols"}, "machine transition");
      witness::Transition tr;
      if (!t["next"].is_number_integer())
        throw semantic_error("machine transition.next: expected an integer");
      tr.next = t["next"].get<int>();
      auto indices = [](const Json& v,
                        const std::string& what) -> std::vector<int> {
        if (!v.is_array())
          throw semantic_error(what + ": expected an index array");
        std::vector<int> out;
        for (const Json& cell : v) {
          if (!cell.is_number_integer())
            throw semantic_error(what + ": expected integers");
          out.push_back(cell.get<int>());
        }
        return out;
      };
      if (t.contains("rows")) tr.on.rows = indices(t["rows"], "transition.rows");
      if (t.contains("cols")) tr.on.cols = indices(t["cols"], "transition.cols");
      state.transitions.push_back(std::move(tr));
    }
    m.states.push_back(std::move(state));
  }
  return m;
}

std::string serialize_machine(const witness::StrategyMachine& m) {
  return machine_to_json(m).dump();
}

std::string report_classify(const StageGame& g,
                            const std::vector<RegimeReport>& regimes,
                            const std::optional<decide::DeltaLabel>& delta,
                            bool pretty) {
  Json doc;
  doc["command"] = "classify";
  doc["game"] = game_to_json(g);
  Json rs;
  for (const RegimeReport& r : regimes) {
    Json one;
    one["in_ls"] = r.verdict.in_ls;
    one["case"] = r.verdict.case_id;
    one["evidence"] = evidence_to_json(g, r.verdict.evidence);
    one["values"] = summary_to_json(r.summary);
    rs[regime_name(r.verdict.regime)] = std::move(one);
  }
  doc["regimes"] = std::move(rs);
  if (delta) {
    Json d;
    d["pp"] = delta->pp_in_ls;
    d["mp"] = delta->mp_in_ls;
    d["mm"] = delta->mm_in_ls;
    d["boundary"] = boundary_name(delta->boundary);
    d["case"] = delta->case_id;
    doc["delta"] = std::move(d);
  }
  return dump(doc, pretty);
}

std::string report_witness(const StageGame& g, const decide::Verdict& verdict,
                           const witness::WitnessResult& result,
                           const std::vector<int>& off_states, bool pretty) {
  Json doc;
  doc["command"] = "witness";
  doc["game"] = game_to_json(g);
  doc["regime"] = regime_name(verdict.regime);
  doc["case"] = verdict.case_id;
  doc["evidence"] = evidence_to_json(g, verdict.evidence);
  doc["t_min"] = result.bound.t_min;
  doc["verified"] = true;  // emission implies the self-check passed
  doc["off_nash_states"] = off_states;
  doc["machine"] = machine_to_json(result.machine);
  return dump(doc, pretty);
}

std::string report_verify(const StageGame& g, Regime regime, bool spe,
                          const std::vector<int>& off_states, bool pretty) {
  Json doc;
  doc["command"] = "verify";
  doc["game"] = game_to_json(g);
  doc["regime"] = regime_name(regime);
  doc["is_spe"] = spe;
  doc["off_nash_states"] = off_states;
  return dump(doc, pretty);
}

std::string report_oracle(const StageGame& g, int t_max,
                          const verify::PayoffSetLadder& ladder,
                          int min_horizon, bool pretty) {
  Json doc;
  doc["command"] = "oracle";
  doc["game"] = game_to_json(g);
  doc["t_max"] = t_max;
  doc["truncated"] = ladder.truncated;
  if (min_horizon > 0)
    doc["min_off_nash_horizon"] = min_horizon;
  else
    doc["min_off_nash_horizon"] = nullptr;
  Json levels = Json::array();
  for (std::size_t t = 0; t < ladder.levels.size(); ++t) {
    const auto& level = ladder.levels[t];
    Json one;
    one["t"] = t + 1;
    Json supportable = Json::array();
    for (auto [i, j] : level.supportable) {
      Json p;
      p["row"] = g.row_labels[i];
      p["col"] = g.col_labels[j];
      supportable.push_back(std::move(p));
    }
    one["supportable"] = std::move(supportable);
    one["payoff_vectors"] = level.payoffs.size();
    if (!level.payoffs.empty()) {
      one["min_pay1"] = to_string(level.min_pay1);
      one["min_pay2"] = to_string(level.min_pay2);
    }
    levels.push_back(std::move(one));
  }
  doc["levels"] = std::move(levels);
  return dump(doc, pretty);
}

}  // namespace offnash::docs
