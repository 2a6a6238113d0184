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

#ifndef OFFNASH_DOCS_HPP
#define OFFNASH_DOCS_HPP

#include <optional>
#include <string>
#include <vector>

#include "offnash/decide.hpp"
#include "offnash/verify.hpp"
#include "offnash/witness.hpp"

namespace offnash::docs {

// Game documents are JSON objects with exactly the fields
//   rows: [labels], cols: [labels], u1: [[payoff]], u2: [[payoff]]
// where each payoff is a JSON integer or a "p/q" string. Parsing and
// the canonical serializer below round-trip exactly; rationals never
// appear in decimal form.

/// Throws parse_error (with line/column) on malformed JSON and
/// semantic_error on structurally invalid documents ("1/0" payoffs,
/// ragged matrices, unknown fields such as a third player's matrix).
StageGame parse_game(const std::string& text);

/// Canonical single-line rendering; parse_game(serialize_game(g)) == g.
std::string serialize_game(const StageGame& g);

witness::StrategyMachine parse_machine(const std::string& text);
std::string serialize_machine(const witness::StrategyMachine& m);

struct RegimeReport {
  decide::Verdict verdict;
  nash::VSummary summary;
};

/// Deterministic report documents (stable field order, canonical "p/q"
/// rationals). The pretty flag switches between indented and compact
/// single-line output; content is identical.
std::string report_classify(const StageGame& g,
                            const std::vector<RegimeReport>& regimes,
                            const std::optional<decide::DeltaLabel>& delta,
                            bool pretty);

std::string report_witness(const StageGame& g, const decide::Verdict& verdict,
                           const witness::WitnessResult& result,
                           const std::vector<int>& off_states, bool pretty);

std::string report_verify(const StageGame& g, Regime regime, bool spe,
                          const std::vector<int>& off_states, bool pretty);

std::string report_oracle(const StageGame& g, int t_max,
                          const verify::PayoffSetLadder& ladder,
                          int min_horizon, bool pretty);

}  // namespace offnash::docs

#endif  // OFFNASH_DOCS_HPP
