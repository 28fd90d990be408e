// Command-line front end; talks to the library exclusively through the
// C API in eqb/eqb_c.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eqb/eqb_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitImpossible = 4;
constexpr int kExitGap = 5;
constexpr int kExitSymmetry = 6;
constexpr int kExitInternal = 7;

int exit_code_for(int status) {
  if (status >= 0) {
    switch (status) {
      case EQB_GUARANTEED: return kExitOk;
      case EQB_UNKNOWN: return kExitUnknown;
      case EQB_IMPOSSIBLE: return kExitImpossible;
      default: return kExitOk;
    }
  }
  switch (status) {
    case EQB_E_INPUT: return kExitInput;
    case EQB_E_NUMERIC: return kExitInput;
    case EQB_E_GAP: return kExitGap;
    case EQB_E_SYMMETRY: return kExitSymmetry;
    default: return kExitInternal;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Session {
  eqb_ctx* ctx;
  explicit Session() : ctx(eqb_ctx_new()) {}
  ~Session() { eqb_ctx_free(ctx); }
};

int emit(eqb_ctx* ctx, int status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    eqb_string_free(out);
  }
  if (status < 0)
    std::fprintf(stderr, "error: %s\n", eqb_last_error(ctx));
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant vector bundle criteria"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol_int = 0, tol_gap = 0;
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized table splitting")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--tol-int", tol_int, "Integer rounding tolerance");
  app.add_option("--tol-gap", tol_gap, "Spectral gap tolerance");

  std::string group_spec;
  auto* cmd_group = app.add_subcommand(
      "group", "Report character table, real irreps and odd irreps");
  cmd_group->add_option("spec", group_spec,
                        "Builtin name (z2, z4, d8, q8, clifford:p,q) or a "
                        "JSON file prefixed with @")
      ->required();

  int cp = 0, cq = 0;
  auto* cmd_clifford = app.add_subcommand(
      "clifford", "Classify a real Clifford algebra by signature");
  cmd_clifford->add_option("p", cp, "positive generator squares")->required();
  cmd_clifford->add_option("q", cq, "negative generator squares")->required();

  std::string check_kind, check_file;
  auto* cmd_check = app.add_subcommand(
      "check", "Decide embedding or stable isomorphism from a document");
  cmd_check
      ->add_option("kind", check_kind, "embed or stable-iso")
      ->check(CLI::IsMember({"embed", "stable-iso"}))
      ->required();
  cmd_check->add_option("input", check_file, "JSON document path or -")
      ->required();

  std::string swan_file;
  auto* cmd_swan = app.add_subcommand(
      "swan", "Smallest trivial bundle containing an odd real bundle");
  cmd_swan->add_option("input", swan_file, "JSON document path or -")
      ->required();

  std::string circle_file;
  auto* cmd_circle = app.add_subcommand(
      "circle", "Exact verdicts on the circle with conjugation");
  cmd_circle->add_option("input", circle_file, "JSON document path or -")
      ->required();

  std::string bloch_file;
  auto* cmd_bloch = app.add_subcommand(
      "bloch", "Analyze a tight-binding model and classify its Bloch bundle");
  cmd_bloch->add_option("input", bloch_file, "JSON model path or -")
      ->required();

  CLI11_PARSE(app, argc, argv);

  Session session;
  eqb_ctx* ctx = session.ctx;
  eqb_ctx_set_format(ctx, format == "json" ? EQB_FORMAT_JSON
                                           : EQB_FORMAT_TEXT);
  if (seed_set) eqb_ctx_set_seed(ctx, seed);
  if (tol_int > 0 && eqb_ctx_set_tolerance(ctx, "tol-int", tol_int) != 0) {
    std::fprintf(stderr, "error: %s\n", eqb_last_error(ctx));
    return kExitInput;
  }
  if (tol_gap > 0 && eqb_ctx_set_tolerance(ctx, "tol-gap", tol_gap) != 0) {
    std::fprintf(stderr, "error: %s\n", eqb_last_error(ctx));
    return kExitInput;
  }

  try {
    char* out = nullptr;
    int status = EQB_E_INPUT;
    if (*cmd_group) {
      std::string spec = group_spec;
      if (!spec.empty() && spec[0] == '@') spec = read_file(spec.substr(1));
      status = eqb_group_report(ctx, spec.c_str(), &out);
    } else if (*cmd_clifford) {
      status = eqb_clifford_report(ctx, cp, cq, &out);
    } else if (*cmd_check) {
      std::string doc = read_file(check_file);
      status = eqb_check(ctx, check_kind.c_str(), doc.c_str(), &out);
    } else if (*cmd_swan) {
      status = eqb_swan(ctx, read_file(swan_file).c_str(), &out);
    } else if (*cmd_circle) {
      status = eqb_circle(ctx, read_file(circle_file).c_str(), &out);
    } else if (*cmd_bloch) {
      status = eqb_bloch(ctx, read_file(bloch_file).c_str(), &out);
    }
    return emit(ctx, status, out);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
