#ifndef EQB_IO_HPP
#define EQB_IO_HPP

#include <string>

#include "eqb/bloch.hpp"
#include "eqb/criteria.hpp"

namespace eqb {

enum class OutputFormat { text, json };

struct RunConfig {
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = TableOptions{}.seed;
  double tol_int = 1e-6;
  double tol_gap = 1e-8;

  TableOptions table_options() const;
  BlochOptions bloch_options() const;
};

// Group specs: builtin names ("trivial", "z2", "z4", "zN", "zN:t=K", "d8",
// "q8", "clifford:p,q") or a JSON object (see parse_group_json).
GroupPtr parse_group_name(const std::string& name);
GroupPtr parse_group_json(const std::string& json_text);

std::string group_to_json(const FiniteGroup& g);
std::string group_report(const GroupPtr& g, const RunConfig& cfg);
std::string clifford_report(int p, int q, const RunConfig& cfg);

// One document carrying group, space, bundles and a question; returns the
// rendered report and the verdict outcome where applicable.
struct CheckResult {
  std::string report;
  Outcome outcome = Outcome::Unknown;
};

CheckResult run_check(const std::string& document_json, const RunConfig& cfg,
                      const std::string& expected_kind = "");
std::string run_swan(const std::string& document_json, const RunConfig& cfg);
CheckResult run_circle(const std::string& document_json,
                       const RunConfig& cfg);
std::string run_bloch(const std::string& model_json, const RunConfig& cfg);

// Serialization helpers with reparse guarantees.
std::string space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const std::string& json_text, const GroupPtr& g);
std::string bundle_to_json(const BundleSpec& b);
std::string verdict_to_json(const Verdict& v);

TightBindingModel model_from_json(const std::string& json_text);
std::string model_to_json(const TightBindingModel& m);

}  // namespace eqb

#endif  // EQB_IO_HPP
