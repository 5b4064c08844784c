// Copyright 2026 The anongame Authors
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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anongame/distributions.h"
#include "anongame/game.h"
#include "anongame/game_io.h"
#include "anongame/harness.h"
#include "anongame/report_io.h"
#include "anongame/rounding.h"
#include "anongame/solve_ptas.h"
#include "anongame/solve_pure.h"

namespace anongame {
namespace {

using nlohmann::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

void Emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

AnonymousGame LoadGame(const std::string& path, std::istream& in) {
  return path == "-" ? ReadGame(in) : ReadGameFile(path);
}

std::vector<double> LoadVector(const std::string& path, std::istream& in) {
  if (path == "-") return ReadProbabilityVector(in);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path);
  return ReadProbabilityVector(file);
}

// Declared lambda is a claim about the game; it is checked, never trusted.
bool AttachDeclaredLambda(const AnonymousGame& game, double computed,
                          json& doc) {
  if (!game.declared_lambda()) return true;
  const double declared = *game.declared_lambda();
  const bool holds = computed <= declared + kExactTolerance;
  doc["declared_lambda"] = declared;
  doc["declared_lambda_holds"] = holds;
  return holds;
}

struct SolvePureArgs {
  std::string game = "-";
  std::optional<double> eps;
  bool automatic = false;
  bool min_eps = false;
  int threads = 0;
};

int RunSolvePure(const SolvePureArgs& args, Streams io) {
  const AnonymousGame game = LoadGame(args.game, io.in);
  PureSolveOptions options;
  options.eps = args.automatic ? std::nullopt : args.eps;
  options.min_eps = args.min_eps;
  options.threads = args.threads;
  const PureSolveReport report = SolvePure(game, options);
  json doc = ToJson(report);
  const bool lambda_ok = AttachDeclaredLambda(game, report.lambda, doc);
  Emit(io.out, doc);
  return report.profile && lambda_ok ? kExitOk : kExitVerificationFailed;
}

struct SolvePtasArgs {
  std::string game = "-";
  double eps = 0.1;
  std::optional<int> k;
  std::uint64_t budget = PtasOptions{}.budget;
  bool minimize = false;
  int threads = 0;
};

int RunSolvePtas(const SolvePtasArgs& args, Streams io) {
  const AnonymousGame game = LoadGame(args.game, io.in);
  PtasOptions options;
  options.eps = args.eps;
  options.k = args.k;
  options.budget = args.budget;
  options.minimize = args.minimize;
  options.threads = args.threads;
  try {
    Emit(io.out, ToJson(SolvePtas(game, options)));
  } catch (const EnumerationBudgetExceeded& e) {
    Emit(io.out, {{"status", "enumeration_budget_exceeded"},
                  {"message", e.what()}});
    io.err << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct RoundArgs {
  std::string input = "-";
  int k = 0;
  double alpha = RoundingConfig{}.alpha;
  double beta = RoundingConfig{}.beta;
};

int RunRound(const RoundArgs& args, Streams io) {
  const std::vector<double> p = LoadVector(args.input, io.in);
  const RoundingConfig config{args.k, args.alpha, args.beta};
  Emit(io.out, ToJson(RoundProbabilities(p, config)));
  return kExitOk;
}

struct GenArgs {
  int n = 0;
  int s = 2;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGen(const GenArgs& args, Streams io) {
  const AnonymousGame raw =
      GenerateLipschitzGame(args.n, args.s, args.lambda, args.seed);
  json doc = GameToJson(raw);
  doc["lambda"] = args.lambda;
  if (args.out.empty()) {
    Emit(io.out, doc);
  } else {
    std::ofstream file(args.out);
    if (!file) throw std::invalid_argument("cannot write " + args.out);
    Emit(file, doc);
    Emit(io.out, {{"status", "ok"}, {"path", args.out}});
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
};

int RunVerify(const VerifyArgs& args, Streams io) {
  std::vector<std::string> names;
  if (args.suite == "all") {
    names = SuiteNames();
  } else {
    names = {args.suite};
  }
  json suites = json::array();
  bool passed = true;
  for (const std::string& name : names) {
    for (const SuiteResult& suite : RunSuite(name, args.seed)) {
      passed = passed && suite.passed();
      suites.push_back(ToJson(suite));
    }
  }
  Emit(io.out, {{"suite", args.suite},
                {"seed", args.seed},
                {"passed", passed},
                {"results", std::move(suites)}});
  return passed ? kExitOk : kExitVerificationFailed;
}

template <typename Fn>
double TimeMillis(int repeat, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeat; ++r) fn();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count() /
         repeat;
}

int RunBench(int repeat, std::uint64_t seed, Streams io) {
  std::mt19937_64 rng(seed);
  const std::vector<double> p = RandomMeans(rng, 1000);
  const AnonymousGame pure_game = GenerateLipschitzGame(12, 3, 0.01, seed);
  const AnonymousGame ptas_game = RandomBinaryGame(rng, 6);
  json timings = json::array();
  auto record = [&](const std::string& name, double ms) {
    timings.push_back({{"name", name}, {"mean_ms", ms}});
  };
  record("poisson_binomial n=1000",
         TimeMillis(repeat, [&] { (void)PoissonBinomial(p); }));
  record("round_probabilities n=1000 k=100", TimeMillis(repeat, [&] {
           (void)RoundProbabilities(p, {.k = 100});
         }));
  record("exact_tv_after_rounding n=1000 k=100", TimeMillis(repeat, [&] {
           (void)ExactTvAfterRounding(p, {.k = 100});
         }));
  record("solve_pure n=12 s=3 auto",
         TimeMillis(repeat, [&] { (void)SolvePure(pure_game); }));
  record("solve_ptas n=6 k=8", TimeMillis(repeat, [&] {
           (void)SolvePtas(ptas_game, {.k = 8});
         }));
  Emit(io.out, {{"status", "ok"}, {"repeat", repeat}, {"timings", timings}});
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Equilibrium solvers for anonymous games."};
  app.name("anongame");
  app.require_subcommand(1);

  SolvePureArgs pure;
  CLI::App* solve_pure = app.add_subcommand(
      "solve-pure", "Search for an approximate pure Nash equilibrium.");
  solve_pure->add_option("--game", pure.game, "Game JSON file, - for stdin");
  CLI::Option* eps_opt =
      solve_pure->add_option("--eps", pure.eps, "Feasibility threshold")
          ->check(CLI::NonNegativeNumber);
  solve_pure
      ->add_flag("--auto", pure.automatic,
                 "Use the guaranteed threshold 4(2s^2+3s+1) lambda (default)")
      ->excludes(eps_opt);
  solve_pure->add_flag("--min-eps", pure.min_eps,
                       "Also report the minimum feasible threshold");
  solve_pure->add_option("--threads", pure.threads,
                         "Worker threads, 0 reads ANONGAME_THREADS");

  SolvePtasArgs ptas;
  CLI::App* solve_ptas = app.add_subcommand(
      "solve-ptas", "Search for an approximate mixed equilibrium on a 1/k grid.");
  solve_ptas->add_option("--game", ptas.game, "Game JSON file, - for stdin");
  solve_ptas->add_option("--eps", ptas.eps, "Target accuracy")
      ->check(CLI::PositiveNumber);
  solve_ptas->add_option("--k", ptas.k, "Grid denominator")
      ->check(CLI::Range(1, 1 << 20));
  solve_ptas->add_option("--budget", ptas.budget,
                         "Maximum number of partitions to enumerate");
  solve_ptas->add_flag("--minimize", ptas.minimize,
                       "Find the smallest feasible threshold");
  solve_ptas->add_option("--threads", ptas.threads,
                         "Worker threads, 0 reads ANONGAME_THREADS");

  RoundArgs round;
  CLI::App* round_cmd = app.add_subcommand(
      "round", "Round a probability vector to multiples of 1/k.");
  round_cmd->add_option("input", round.input,
                        "Vector file (JSON array or plain numbers), - for stdin");
  round_cmd->add_option("--k", round.k, "Grid denominator")->required();
  round_cmd->add_option("--alpha", round.alpha, "Small-region exponent");
  round_cmd->add_option("--beta", round.beta, "Analysis exponent");

  GenArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate a random lambda-Lipschitz game.");
  gen_cmd->add_option("--n", gen.n, "Players")->required();
  gen_cmd->add_option("--s", gen.s, "Strategies");
  gen_cmd->add_option("--lambda", gen.lambda, "Lipschitz target")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Write the game here");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a named oracle suite.");
  std::vector<std::string> choices = SuiteNames();
  choices.push_back("all");
  verify_cmd->add_option("suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(choices));
  verify_cmd->add_option("--seed", verify.seed, "Random seed");

  int bench_repeat = 5;
  std::uint64_t bench_seed = 0;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time the main operations.");
  bench_cmd->add_option("--repeat", bench_repeat, "Repetitions per item")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve_pure) return RunSolvePure(pure, io);
    if (*solve_ptas) return RunSolvePtas(ptas, io);
    if (*round_cmd) return RunRound(round, io);
    if (*gen_cmd) return RunGen(gen, io);
    if (*verify_cmd) return RunVerify(verify, io);
    if (*bench_cmd) return RunBench(bench_repeat, bench_seed, io);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace anongame
