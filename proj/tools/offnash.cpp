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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "offnash/docs.hpp"
#include "offnash/rng.hpp"

namespace {

using namespace offnash;

// exit codes: 0 ok, 1 internal, 2 parse, 3 semantic, 4 not in the
// locally-suboptimal set, 5 horizon cap exceeded
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitNotInLs = 4;
constexpr int kExitCap = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw semantic_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

StageGame load_game(const std::string& path) {
  return docs::parse_game(read_file(path));
}

int cmd_classify(const std::vector<std::string>& paths,
                 const std::string& filter) {
  const bool batch = paths.size() > 1;
  for (const std::string& path : paths) {
    StageGame g = load_game(path);
    std::vector<docs::RegimeReport> reports;
    std::optional<decide::DeltaLabel> delta;
    if (filter == "all") {
      decide::Classification c = decide::classify(g);
      reports.push_back({c.pp, c.v_pp});
      reports.push_back({c.mp, c.v_mp});
      reports.push_back({decide::decide(g, Regime::pm),
                         nash::v_summary(g, Regime::pm)});
      reports.push_back({c.mm, c.v_mm});
      delta = c.delta;
    } else {
      Regime r = regime_from_name(filter);
      reports.push_back({decide::decide(g, r), nash::v_summary(g, r)});
    }
    std::cout << docs::report_classify(g, reports, delta, /*pretty=*/!batch);
  }
  return 0;
}

int cmd_witness(const std::string& path, const std::string& regime_name_str,
                long cap) {
  StageGame g = load_game(path);
  Regime regime = regime_from_name(regime_name_str);
  decide::Verdict verdict = decide::decide(g, regime);
  if (!verdict.in_ls) {
    std::cerr << "offnash: game is not in the locally-suboptimal set for "
              << regime_name_str << "\n";
    return kExitNotInLs;
  }
  witness::WitnessResult result = witness::build_witness(g, verdict, cap);
  auto off = verify::off_nash_states(g, result.machine, regime);
  std::cout << docs::report_witness(g, verdict, result, off, true);
  return 0;
}

int cmd_verify(const std::string& game_path, const std::string& machine_path,
               const std::string& regime_name_str) {
  StageGame g = load_game(game_path);
  witness::StrategyMachine m = docs::parse_machine(read_file(machine_path));
  Regime regime = regime_from_name(regime_name_str);
  bool spe;
  std::vector<int> off;
  try {
    spe = verify::is_spe(g, m, regime);
    off = verify::off_nash_states(g, m, regime);
  } catch (const input_error& e) {
    throw semantic_error(e.what());  // malformed machine
  }
  std::cout << docs::report_verify(g, regime, spe, off, true);
  return 0;
}

int cmd_oracle(const std::string& path, int t_max, long cap) {
  if (t_max < 1) throw semantic_error("--tmax must be >= 1");
  if (cap < 1) throw semantic_error("--cap must be >= 1");
  StageGame g = load_game(path);
  verify::PayoffSetLadder ladder =
      verify::payoff_set_ladder(g, t_max, static_cast<std::size_t>(cap));
  int min_horizon = verify::oracle_min_horizon(g, t_max);
  std::cout << docs::report_oracle(g, t_max, ladder, min_horizon, true);
  return 0;
}

int cmd_gen(int rows, int cols, long lo, long hi, int count,
            std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw semantic_error("need rows, cols >= 1");
  if (hi < lo) throw semantic_error("empty payoff range");
  SplitMix64 rng(seed);
  for (int n = 0; n < count; ++n) {
    Matrix u1(rows, std::vector<Rational>(cols));
    Matrix u2(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) u1[i][j] = rng.range(lo, hi);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) u2[i][j] = rng.range(lo, hi);
    std::cout << docs::serialize_game(make_game(u1, u2)) << "\n";
  }
  return 0;
}

// The 3x2 family whose witnesses need ever longer horizons as alpha
// drops below 2; alpha is substituted from the command line.
int cmd_template(const std::string& alpha_text) {
  auto alpha = parse_rational(alpha_text);
  if (!alpha) throw semantic_error("bad rational for --alpha: " + alpha_text);
  Matrix u1 = {{3, *alpha}, {3, 2}, {*alpha, 2}};
  Matrix u2 = {{2, 1}, {2, 2}, {1, 2}};
  std::cout << docs::serialize_game(make_game(u1, u2)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision procedures for locally suboptimal play in "
               "finitely repeated 2-player games"};
  app.require_subcommand(1);

  std::vector<std::string> classify_paths;
  std::string classify_regime = "all";
  auto* classify = app.add_subcommand(
      "classify", "classify game files (all regimes or one)");
  classify->add_option("games", classify_paths, "game files")
      ->required()
      ->expected(-1);
  classify->add_option("--regime", classify_regime, "pp|mp|pm|mm|all")
      ->check(CLI::IsMember({"pp", "mp", "pm", "mm", "all"}));

  std::string witness_path, witness_regime;
  long witness_cap = 10000;
  auto* witness_cmd = app.add_subcommand(
      "witness", "build and verify an explicit equilibrium witness");
  witness_cmd->add_option("game", witness_path, "game file")->required();
  witness_cmd->add_option("--regime", witness_regime, "pp|mp|pm|mm")
      ->required()
      ->check(CLI::IsMember({"pp", "mp", "pm", "mm"}));
  witness_cmd->add_option("--cap", witness_cap, "largest horizon to materialize");

  std::string verify_game, verify_machine, verify_regime;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check a strategy machine by one-shot deviations");
  verify_cmd->add_option("game", verify_game, "game file")->required();
  verify_cmd->add_option("machine", verify_machine, "machine file")->required();
  verify_cmd->add_option("--regime", verify_regime, "pp|mp|pm|mm")
      ->required()
      ->check(CLI::IsMember({"pp", "mp", "pm", "mm"}));

  std::string oracle_path;
  int oracle_tmax = 8;
  long oracle_cap = 100000;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "pure-strategy equilibrium-payoff recursion up to a horizon");
  oracle_cmd->add_option("game", oracle_path, "game file")->required();
  oracle_cmd->add_option("--tmax", oracle_tmax, "largest horizon");
  oracle_cmd->add_option("--cap", oracle_cap, "payoff-set size cap");

  int gen_rows = 2, gen_cols = 2, gen_count = 1;
  long gen_min = 0, gen_max = 3;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand(
      "gen", "generate seeded random integer-payoff games (one per line)");
  gen_cmd->add_option("--rows", gen_rows, "row count");
  gen_cmd->add_option("--cols", gen_cols, "column count");
  gen_cmd->add_option("--min", gen_min, "smallest payoff");
  gen_cmd->add_option("--max", gen_max, "largest payoff");
  gen_cmd->add_option("--count", gen_count, "number of games");
  gen_cmd->add_option("--seed", gen_seed, "rng seed")->required();

  std::string template_alpha = "1";
  auto* template_cmd = app.add_subcommand(
      "template", "emit the parametric long-horizon 3x2 game");
  template_cmd->add_option("--alpha", template_alpha,
                           "payoff parameter (integer or p/q)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(classify_paths, classify_regime);
    if (witness_cmd->parsed())
      return cmd_witness(witness_path, witness_regime, witness_cap);
    if (verify_cmd->parsed())
      return cmd_verify(verify_game, verify_machine, verify_regime);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path, oracle_tmax, oracle_cap);
    if (gen_cmd->parsed())
      return cmd_gen(gen_rows, gen_cols, gen_min, gen_max, gen_count, gen_seed);
    if (template_cmd->parsed()) return cmd_template(template_alpha);
  } catch (const parse_error& e) {
    std::cerr << "offnash: parse error at line " << e.line << ", column "
              << e.column << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const semantic_error& e) {
    std::cerr << "offnash: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const horizon_cap_error& e) {
    std::cerr << "offnash: " << e.what() << " (needs t >= " << e.t_min << ")\n";
    return kExitCap;
  } catch (const not_in_ls_error& e) {
    std::cerr << "offnash: " << e.what() << "\n";
    return kExitNotInLs;
  } catch (const input_error& e) {
    std::cerr << "offnash: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "offnash: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
