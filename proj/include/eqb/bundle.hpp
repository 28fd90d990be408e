#ifndef EQB_BUNDLE_HPP
#define EQB_BUNDLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqb/reptheory.hpp"

namespace eqb {

enum class Field { R, C, H };

const char* field_name(Field f);

// One stratum of a stratified G-space: a stabiliser subgroup (one
// representative up to conjugacy), the supremum d of cell dimensions with
// that stabiliser, and the components on which fibre data may differ.
struct StratumSpec {
  std::string id;
  Subgroup stabiliser;
  int d = 0;
  std::vector<std::string> components;
};

// Declared adjacency between components of two strata; `low` has the smaller
// stabiliser and lies in the closure direction of `high`.
struct Adjacency {
  std::string low_stratum, low_component;
  std::string high_stratum, high_component;
};

struct SpaceSpec {
  GroupPtr group;
  std::vector<StratumSpec> strata;
  bool relative = false;  // strata describe the complement of an invariant A
  std::vector<Adjacency> adjacency;

  const StratumSpec& stratum(const std::string& id) const;
  int stratum_index(const std::string& id) const;
};

bool same_space(const SpaceSpec& a, const SpaceSpec& b);

// Cached per-stratum representation data.  For field R the fibre indexing is
// by real irreps of the stabiliser; for field C by complex irreps; for
// field H by the real irreps reinterpreted through the standard bijection
// with quaternionic irreps (commutant 4, quaternionic dimension dim_H).
struct StratumContext {
  MaterializedSubgroup sub;
  RealIrrepSet real_set;
  CharacterTable complex_table;
};

struct SpaceContext {
  std::vector<StratumContext> strata;

  static SpaceContext build(const SpaceSpec& space,
                            const TableOptions& opt = {});
};

// Number of fibre slots (irreps) for one stratum under the given field.
int irrep_count(const StratumContext& ctx, Field field);
// Dimension of irrep `i` over the base field.
int irrep_dim(const StratumContext& ctx, Field field, int i);
// Commutant size used in the ceiling denominators.
int irrep_commutant(const StratumContext& ctx, Field field, int i);
// Whether irrep `i` is odd relative to t.
bool irrep_odd(const StratumContext& ctx, Field field, int i);
std::string irrep_label(const StratumContext& ctx, Field field, int i);

struct BundleSpec {
  SpaceSpec space;
  Field field = Field::C;
  bool odd = false;
  // (stratum id, component id) -> multiplicities over the stratum's irreps.
  std::map<std::pair<std::string, std::string>, std::vector<int>> fibres;

  const std::vector<int>& fibre(const std::string& stratum,
                                const std::string& component) const;
};

struct ValidationIssue {
  std::string where;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
  // (stratum id, component id) -> rank over the base field.
  std::map<std::pair<std::string, std::string>, int> ranks;
};

ValidationReport validate(const BundleSpec& b, const SpaceContext& ctx);
ValidationReport validate(const BundleSpec& b);

// A complex bundle carrying a conjugate-linearity pattern gamma: elements of
// the stabiliser H act complex-linearly when gamma = 0 and conjugate-
// linearly when gamma = 1.  Fibre data is given over the complex irreps of
// the unitary part H0 = ker(gamma|H) of each stabiliser.
struct GammaBundle {
  GroupPtr group;
  std::vector<int> gamma;  // per element of group, values in {0,1}
  SpaceSpec space;         // over `group`
  std::map<std::pair<std::string, std::string>, std::vector<int>> fibres;
};

// Rewrites a gamma-twisted complex bundle as an odd real bundle over the
// enlarged group Z/4 x|_gamma G; stabilisers enlarge to Z/4 x| H and complex
// fibre characters become real characters decomposed into odd real irreps.
// Real ranks double the complex ranks.  Throws when the fibre data is not a
// genuine twisted character (integrality failure).
BundleSpec translate_gamma_to_real(const GammaBundle& b,
                                   const TableOptions& opt = {});

// The enlarged space alone (used to build companion bundles).
SpaceSpec translate_space(const GammaBundle& b);

BundleSpec direct_sum(const BundleSpec& a, const BundleSpec& b);

// Trivial bundle X x W^copies for a representation W of the whole group
// given by multiplicities over its irreps (real irreps for field R, complex
// for field C, quaternionic-via-real for field H).  Fibre data at each
// stratum is the restriction to the stabiliser.
BundleSpec trivial_bundle(const SpaceSpec& space, Field field,
                          const std::vector<int>& rep_multiplicities,
                          int copies, const TableOptions& opt = {});

BundleSpec zero_bundle(const SpaceSpec& space, Field field, bool odd);

// Rank over the base field on one component.
int component_rank(const BundleSpec& b, const SpaceContext& ctx,
                   const std::string& stratum, const std::string& component);

}  // namespace eqb

#endif  // EQB_BUNDLE_HPP
