#ifndef EQB_CRITERIA_HPP
#define EQB_CRITERIA_HPP

#include "eqb/bundle.hpp"
#include "eqb/oracles.hpp"

namespace eqb {

enum class Outcome { Guaranteed, Impossible, Unknown };

enum class RowStatus { satisfied, violated_necessary, below_sufficient };

const char* outcome_name(Outcome o);
const char* row_status_name(RowStatus s);

struct VerdictRow {
  std::string stratum;
  std::string component;
  std::string irrep;
  long long required = 0;  // sufficient-condition threshold
  long long actual = 0;
  RowStatus status = RowStatus::satisfied;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<VerdictRow> rows;
  bool line_rule_applied = false;   // rank-1 route for fields R and C
  bool zero_rank_shortcut = false;  // both sides are the zero bundle
  bool hypothesis_asserted = false; // stable-iso premise is caller-asserted
  std::string note;
};

// Sufficient condition: at every stratum component, for every irrep with
// m(V) != 0, m(E) >= m(V) + ceil((d+1-c)/c).  Fibrewise containment
// m(E) >= m(V) is necessary; a violation makes the verdict Impossible.
Verdict embed_verdict(const BundleSpec& v, const BundleSpec& e,
                      const TableOptions& opt = {});

// Stable isomorphism E1 (+) V ~ E2 (+) V unstabilises to E1 ~ E2 when
// m((E1)_x) >= ceil((d+2-c)/c) at every stratum component for every irrep
// with m(V) != 0, or when both bundles are lines over field R or C.  The
// premise itself is caller-asserted; only its fibrewise consequence (equal
// multiplicity data for E1 and E2) is checkable, and a mismatch makes the
// verdict Impossible.
Verdict stable_iso_verdict(const BundleSpec& e1, const BundleSpec& e2,
                           const BundleSpec& v, const TableOptions& opt = {});

// Smallest r such that the embedding criterion puts V inside the trivial
// bundle X x (odd regular representation)^r.  Zero for the zero bundle.
int swan_rank(const BundleSpec& v, const TableOptions& opt = {});

// Odd regular representation as a multiplicity vector over the real irreps
// of the group (dim/c on odd irreps, zero elsewhere).
std::vector<int> regular_odd_multiplicities(const RealIrrepSet& set);

struct SwanReport {
  int r = 0;
  int upper_bound = 0;  // rank(V) + dim(X) + 1
  bool guaranteed_at_r = false;
  bool not_guaranteed_below = false;  // vacuously true when r = 0
  bool pass = false;
};

SwanReport swan_selfcheck(const BundleSpec& v, const TableOptions& opt = {});

enum class ThresholdSetting {
  plain,            // ordinary F-vector bundles, single stratum
  real_involution,  // conjugate-linear lift squaring to +1
  quaternionic,     // conjugate-linear lift squaring to -1
  point_reflection, // complex bundles on the torus with k -> -k
  reflection_time,  // point reflection plus time reversal, odd real bundles
};

struct ThresholdQuery {
  ThresholdSetting setting = ThresholdSetting::plain;
  Field field = Field::C;  // plain only
  int d = 0;               // plain / point_reflection
  int d0 = 0, d1 = 0;      // two-stratum settings
  int a = 0, b = 0;        // reflection_time signs
};

struct ThresholdTable {
  // Minimal rank excess rank(E) - rank(V) for the embedding criterion and
  // minimal rank(E1) for the stable-isomorphism criterion, in the natural
  // rank units of the setting (F-rank for plain, complex rank for the
  // involution settings, real rank for reflection_time).
  int embed_excess = 0;
  int stable_rank = 0;
  std::string units;
  std::string description;
};

// Derived by instantiating the general criteria over the matching
// two-stratum space and reducing multiplicity conditions to rank conditions
// through the unique odd irrep of each stabiliser.
ThresholdTable threshold_tables(const ThresholdQuery& q,
                                const TableOptions& opt = {});

// Exact decision on the circle with the conjugation involution; derived from
// the complete classification by eigenvalue pairs, never Unknown.
Verdict circle_verdict_embed(const CircleBundle& v, const CircleBundle& e);
Verdict circle_verdict_stable_iso(const CircleBundle& e1,
                                  const CircleBundle& e2,
                                  const CircleBundle& v);

// The circle as a two-stratum space over Z/2 together with the bundle data
// matching a classification pair; used to cross-check the general criteria
// against the exact classification.
SpaceSpec circle_space();
BundleSpec circle_bundle_spec(const SpaceSpec& space, const CircleBundle& b);

}  // namespace eqb

#endif  // EQB_CRITERIA_HPP
