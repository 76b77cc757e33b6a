// Copyright 2026 The RecallForge Authors. All rights reserved.
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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "recall_forge/game_io.h"
#include "recall_forge/generators.h"
#include "recall_forge/recall.h"
#include "recall_forge/sequence_set.h"
#include "recall_forge/shuffle.h"
#include "recall_forge/solver.h"
#include "recall_forge/span.h"
#include "recall_forge/transform.h"

namespace recall_forge {
namespace {

// Signals a negative answer; the message goes to stderr.
class NegativeAnswer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

// Writes to `path`, or to stdout when the path is empty or "-".
void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << text;
  if (!file) throw InvalidInput("failed writing '" + path + "'");
}

Player ParsePlayerFlag(const std::string& name) {
  std::optional<Player> player = ParsePlayer(name);
  if (!player) throw InvalidInput("player must be 'max' or 'min'");
  return *player;
}

bool HasMin(const Alphabet& alphabet) {
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    if (alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)}).owner ==
        Player::kMin) {
      return true;
    }
  }
  return false;
}

// Re-expresses a set over another alphabet by action label.
SequenceSet Relabel(const SequenceSet& set, const AlphabetPtr& alphabet) {
  std::vector<Sequence> sequences;
  for (const Sequence& seq : set) {
    Sequence mapped;
    for (ActionId a : seq) {
      std::optional<ActionId> target = alphabet->FindAction(set.alphabet().Label(a));
      if (!target) {
        throw InvalidInput("unknown action '" + set.alphabet().Label(a) + "'");
      }
      mapped.push_back(*target);
    }
    sequences.push_back(std::move(mapped));
  }
  return SequenceSet(alphabet, std::move(sequences));
}

std::string FormatSolution(const Game& game, const Solution& solution) {
  std::ostringstream text;
  text << RationalToString(solution.value) << "\n";
  const Alphabet& alphabet = game.alphabet();
  std::vector<bool> used = game.structure().UsedInfosets();
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    if (!used[i]) continue;
    text << alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)}).id << " "
         << alphabet.Label(solution.strategy[i]) << "\n";
  }
  return text.str();
}

void AddFileArg(CLI::App* command, std::string* file) {
  command->add_option("file", *file, "Input document, '-' for stdin")
      ->capture_default_str();
}

void RunClassify(const std::string& file, const Io& io) {
  GameStructure structure = ParseStructure(ReadInput(file, io.in));
  io.out << "max: "
         << RecallClassName(ClassifyRecall(structure, Player::kMax)) << "\n";
  if (HasMin(structure.alphabet())) {
    io.out << "min: "
           << RecallClassName(ClassifyRecall(structure, Player::kMin)) << "\n";
  }
}

void RunShuffle(const std::string& file, const std::string& output,
                const Io& io) {
  GameStructure structure = ParseStructure(ReadInput(file, io.in));
  ShuffleResult result = ShuffleStructure(structure);
  if (!result.salr.has_salr) {
    throw NegativeAnswer("no s-alr: no infoset covers " +
                         result.salr.failing_subset->ToString());
  }
  WriteOutput(output, SerializeStructure(*result.structure), io.out);
}

void RunSpan(const std::string& file, const std::string& player,
             const std::string& output, const std::string& certificate_path,
             const Io& io) {
  GameStructure structure = ParseStructure(ReadInput(file, io.in));
  SequenceSet histories =
      ExtractHistories(structure, ParsePlayerFlag(player));
  SpanCertificate certificate = MinimalSpan(histories);
  WriteOutput(output, SerializeStructure(StructureFromSequences(certificate.span)),
              io.out);
  if (!certificate_path.empty()) {
    WriteOutput(certificate_path, SerializeCertificate(certificate), io.out);
  }
}

void RunSd(const std::string& file, const std::string& player, const Io& io) {
  GameStructure structure = ParseStructure(ReadInput(file, io.in));
  io.out << ShuffleDepth(ExtractHistories(structure, ParsePlayerFlag(player)))
         << "\n";
}

void RunTransform(const std::string& file, const std::string& certificate_path,
                  const std::string& output, const Io& io) {
  Game game = ParseGame(ReadInput(file, io.in));
  SpanCertificate certificate = ParseCertificate(
      ReadInput(certificate_path, io.in), game.structure().alphabet_ptr());
  WriteOutput(output, SerializeGame(TransferPayoffs(game, certificate).game),
              io.out);
}

void RunSolve(const std::string& file, const std::string& method_name,
              const Io& io) {
  std::optional<SolveMethod> method = ParseSolveMethod(method_name);
  if (!method) throw InvalidInput("unknown method '" + method_name + "'");
  Game game = ParseGame(ReadInput(file, io.in));
  io.out << FormatSolution(game, Solve(game, *method));
}

void RunCompose(const std::string& file, const std::string& max_cert,
                const std::string& min_cert, const std::string& output,
                const Io& io) {
  Game game = ParseGame(ReadInput(file, io.in));
  const AlphabetPtr& alphabet = game.structure().alphabet_ptr();
  SpanCertificate max_span = ParseCertificate(ReadInput(max_cert, io.in), alphabet);
  SpanCertificate min_span = ParseCertificate(ReadInput(min_cert, io.in), alphabet);
  WriteOutput(output,
              SerializeGame(ComposeTwoPlayer(game, max_span, min_span).game),
              io.out);
}

void RunVerifySpan(const std::string& original_path,
                   const std::string& candidate_path,
                   const std::string& player, const std::string& output,
                   const Io& io) {
  Player owner = ParsePlayerFlag(player);
  GameStructure original = ParseStructure(ReadInput(original_path, io.in));
  GameStructure candidate = ParseStructure(ReadInput(candidate_path, io.in));
  SequenceSet histories = ExtractHistories(original, owner);
  SequenceSet span = Relabel(ExtractHistories(candidate, owner),
                             original.alphabet_ptr());
  if (!IsAlrSet(span)) {
    throw NegativeAnswer("candidate histories are not ALR: " + span.ToString());
  }
  std::optional<SpanCertificate> certificate = VerifySpan(histories, span);
  if (!certificate) throw NegativeAnswer("candidate does not span the input");
  WriteOutput(output, SerializeCertificate(*certificate), io.out);
}

struct GenFlags {
  std::string variant = "I";
  int n = 3;
  RandomGameParams random;
};

void RunBench(const std::string& family, int n_max, const Io& io) {
  if (n_max < 1) throw InvalidInput("--n-max must be positive");
  io.out << "n,span_size,wall_ms\n";
  for (int n = 1; n <= n_max; ++n) {
    SequenceSet set;
    if (family == "lowerbound") {
      set = GenLowerbound(n);
    } else if (family == "pennies-III") {
      set = ExtractHistories(GenPennies(PenniesVariant::kIII, n).structure(),
                             Player::kMax);
    } else {
      throw InvalidInput("unknown family '" + family + "'");
    }
    auto start = std::chrono::steady_clock::now();
    SpanCertificate certificate = MinimalSpan(set);
    std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    io.out << n << "," << certificate.span.size() << "," << std::fixed
           << std::setprecision(3) << elapsed.count() << "\n";
    io.out.unsetf(std::ios::floatfield);
  }
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Solve and transform games with imperfect recall",
               "recall-forge"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string output;
  std::string certificate;
  std::string player = "max";
  std::string method = "auto";

  CLI::App* classify = app.add_subcommand("classify", "Recall class per player");
  AddFileArg(classify, &file);

  CLI::App* shuffle = app.add_subcommand(
      "shuffle", "ALR structure over reordered histories, if one exists");
  AddFileArg(shuffle, &file);
  shuffle->add_option("-o,--output", output, "Output path");

  CLI::App* span = app.add_subcommand("span", "Minimal ALR span structure");
  AddFileArg(span, &file);
  span->add_option("-o,--output", output, "Output path");
  span->add_option("--certificate", certificate, "Certificate output path");
  span->add_option("--player", player, "max or min")->capture_default_str();

  CLI::App* sd = app.add_subcommand("sd", "Shuffle depth");
  AddFileArg(sd, &file);
  sd->add_option("--player", player, "max or min")->capture_default_str();

  CLI::App* transform =
      app.add_subcommand("transform", "Move payoffs onto a span structure");
  AddFileArg(transform, &file);
  transform->add_option("--certificate", certificate, "Span certificate")
      ->required();
  transform->add_option("-o,--output", output, "Output path");

  CLI::App* solve = app.add_subcommand("solve", "Exact maxmin value");
  AddFileArg(solve, &file);
  solve->add_option("--method", method, "auto, bruteforce or span")
      ->capture_default_str();

  std::string max_cert;
  std::string min_cert;
  CLI::App* compose =
      app.add_subcommand("compose", "Two-player game from two span certificates");
  AddFileArg(compose, &file);
  compose->add_option("--max-cert", max_cert, "Max span certificate")->required();
  compose->add_option("--min-cert", min_cert, "Min span certificate")->required();
  compose->add_option("-o,--output", output, "Output path");

  std::string candidate;
  CLI::App* verify =
      app.add_subcommand("verify-span", "Certificate that CAND spans ORIG");
  verify->add_option("original", file, "Original structure")->required();
  verify->add_option("candidate", candidate, "Candidate structure")->required();
  verify->add_option("--player", player, "max or min")->capture_default_str();
  verify->add_option("-o,--output", output, "Certificate output path");

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "Generate a game document");
  gen->require_subcommand(1);
  CLI::App* pennies = gen->add_subcommand("pennies", "Team pennies game");
  pennies->add_option("--variant", gen_flags.variant, "I, II or III")
      ->capture_default_str();
  pennies->add_option("--n", gen_flags.n, "Die outcomes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::App* lowerbound =
      gen->add_subcommand("lowerbound", "Family with exponential spans");
  lowerbound->add_option("--n", gen_flags.n, "Infoset count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::App* random = gen->add_subcommand("random", "Seeded random game");
  random->add_option("--seed", gen_flags.random.seed)->capture_default_str();
  random->add_option("--depth", gen_flags.random.depth)
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  random->add_option("--branching", gen_flags.random.branching)
      ->check(CLI::Range(2, 3))
      ->capture_default_str();
  random->add_option("--merge-prob", gen_flags.random.merge_prob)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  random->add_option("--players", gen_flags.random.players)
      ->check(CLI::Range(1, 2))
      ->capture_default_str();

  std::string family = "lowerbound";
  int n_max = 8;
  CLI::App* bench = app.add_subcommand("bench", "Span size and time as CSV");
  bench->add_option("--family", family, "lowerbound or pennies-III")
      ->capture_default_str();
  bench->add_option("--n-max", n_max, "Largest n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      RunClassify(file, io);
    } else if (*shuffle) {
      RunShuffle(file, output, io);
    } else if (*span) {
      RunSpan(file, player, output, certificate, io);
    } else if (*sd) {
      RunSd(file, player, io);
    } else if (*transform) {
      RunTransform(file, certificate, output, io);
    } else if (*solve) {
      RunSolve(file, method, io);
    } else if (*compose) {
      RunCompose(file, max_cert, min_cert, output, io);
    } else if (*verify) {
      RunVerifySpan(file, candidate, player, output, io);
    } else if (*pennies) {
      std::optional<PenniesVariant> variant =
          ParsePenniesVariant(gen_flags.variant);
      if (!variant) throw InvalidInput("variant must be I, II or III");
      out << SerializeGame(GenPennies(*variant, gen_flags.n));
    } else if (*lowerbound) {
      out << SerializeGame(GenLowerboundGame(gen_flags.n));
    } else if (*random) {
      out << SerializeGame(GenRandom(gen_flags.random));
    } else if (*bench) {
      RunBench(family, n_max, io);
    }
  } catch (const NegativeAnswer& e) {
    err << e.what() << "\n";
    return kExitNegative;
  } catch (const SizeLimitExceeded& e) {
    err << "size limit exceeded: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace recall_forge
