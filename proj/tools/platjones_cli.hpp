#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/matchings.hpp"
#include "platjones/plat.hpp"

namespace platjones::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // bad flags, syntax errors, generator out of range
  kLink = 3,
  kOracleLimit = 4,
};

struct CliConfig {
  int strands = 2;
  std::string word_text;
  bool json = false;
  JonesConvention jones_convention = kDefaultJonesConvention;
  bool use_oracle = false;
  bool show_vector = false;
  bool mirror = false;
};

inline void print_text(std::ostream& out, const PlatInvariants& inv, const BraidWord& w,
                       bool show_vector) {
  out << "strands:    " << w.strands() << "\n"
      << "word:       " << render(w) << "\n"
      << "bracket:    " << inv.bracket << "\n"
      << "writhe:     " << inv.writhe << "\n"
      << "kauffman_x: " << inv.kauffman_x << "\n"
      << "jones:      " << inv.jones.to_string() << "  (" << to_string(inv.convention) << ")\n";
  if (show_vector) {
    const MatchingBasis& b = basis(w.strands());
    out << "bracket_vector:\n";
    for (std::size_t i = 0; i < b.size(); ++i)
      out << "  " << b[i] << "  " << inv.bracket_vector[i] << "\n";
  }
}

/// Runs one invocation; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket, writhe and Jones polynomial of plat closures"};
  CliConfig cfg;
  std::string convention = "a-4";
  app.add_option("--strands", cfg.strands, "strand count 2n (even, >= 2)")->required();
  app.add_option("--word", cfg.word_text, "braid word, e.g. \"s2^-1 s3 s1^3\"")->required();
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--jones-convention", convention, "substitution for V(t): a4 (t=a^4) or a-4 (t=a^-4)")
      ->check(CLI::IsMember({"a4", "a-4"}));
  app.add_flag("--vector", cfg.show_vector, "print the bracket vector");
  app.add_flag("--mirror", cfg.mirror, "evaluate the mirror image");
  app.add_flag("--oracle", cfg.use_oracle, "evaluate by brute-force state sum")->group("");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.jones_convention = convention == "a4" ? JonesConvention::t_eq_a4 : JonesConvention::t_eq_a_minus4;

  try {
    BraidWord w = parse_braid(cfg.word_text, cfg.strands);
    if (cfg.mirror) w = mirror(w);
    const PlatInvariants inv = invariants_of(
        w, cfg.jones_convention, cfg.use_oracle ? Engine::oracle : Engine::matrix);
    if (cfg.json) {
      out << to_json(inv, w).dump() << "\n";
    } else {
      print_text(out, inv, w, cfg.show_vector);
    }
    return kOk;
  } catch (const IsLinkError& e) {
    err << "error: " << e.what() << "\n";
    return kLink;
  } catch (const TooManyCrossings& e) {
    err << "error: " << e.what() << "\n";
    return kOracleLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace platjones::cli
