#ifndef EQB_REPTHEORY_HPP
#define EQB_REPTHEORY_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "eqb/group.hpp"

namespace eqb {

using cplx = std::complex<double>;

struct TableOptions {
  std::uint64_t seed = 0x5eedbea7ULL;
  int max_retries = 5;
  double tol_int = 1e-6;    // rounding tolerance for integral quantities
  double tol_ortho = 1e-9;  // orthogonality / value-matching tolerance
};

// Conjugacy class bookkeeping shared by tables and real irreps.
struct ClassData {
  std::vector<std::vector<int>> classes;  // sorted members, canonical order
  std::vector<int> class_of;              // element -> class index
  std::vector<int> sizes;
  int order = 0;

  static ClassData build(const FiniteGroup& g);
};

struct CharacterTable {
  GroupPtr group;
  ClassData classes;
  std::vector<int> degrees;                // one per irreducible character
  std::vector<std::vector<cplx>> chars;    // [irrep][class]
};

enum class IrrepType { R, C, H };

// One irreducible real representation, stored through its character.
struct RealIrrep {
  std::vector<double> character;  // per class
  int real_dim = 0;
  IrrepType type = IrrepType::R;
  int c = 1;                      // commutant dimension over R: 1, 2 or 4
  std::vector<int> constituents;  // indices into the complex table
  bool odd = false;               // character(t) == -real_dim, when t is set
};

struct RealIrrepSet {
  GroupPtr group;
  ClassData classes;
  std::vector<RealIrrep> irreps;
};

CharacterTable complex_character_table(const GroupPtr& g,
                                       const TableOptions& opt = {});

// (1/|G|) sum_g chi(g^2), rounded into {-1, 0, +1}.
int frobenius_schur(const CharacterTable& table, int i);

RealIrrepSet real_irreps(const GroupPtr& g, const TableOptions& opt = {});

// Sublist of real_irreps with character(t) = -dim; requires t.
std::vector<RealIrrep> odd_irreps(const RealIrrepSet& set);
std::vector<RealIrrep> odd_irreps(const GroupPtr& g,
                                  const TableOptions& opt = {});

// <w, rho>/c rounded to a nonnegative integer; w is a real class function
// over set.classes.  Throws when the result is not integral.
int multiplicity(const RealIrrepSet& set, const std::vector<double>& w,
                 const RealIrrep& rho, double tol_int = 1e-6);

// Same inner product against a complex character.
int multiplicity_complex(const CharacterTable& table,
                         const std::vector<cplx>& w, int irrep,
                         double tol_int = 1e-6);

// Pointwise restriction of a class function on G to a subgroup given in
// materialized form; result is a class function over sub's classes.
std::vector<double> restrict_class_function(const ClassData& g_classes,
                                            const std::vector<double>& chi,
                                            const MaterializedSubgroup& sub,
                                            const ClassData& sub_classes);
std::vector<cplx> restrict_class_function(const ClassData& g_classes,
                                          const std::vector<cplx>& chi,
                                          const MaterializedSubgroup& sub,
                                          const ClassData& sub_classes);

// Character of the odd half of the regular representation:
// |G|/2 at the identity, -|G|/2 at t, zero elsewhere.
std::vector<double> regular_odd_character(const RealIrrepSet& set);

std::optional<RealIrrep> unique_odd_irrep(const RealIrrepSet& set);

// Real character of a per-element value table (trace of each element).
std::vector<double> class_function_from_traces(
    const ClassData& classes, const std::vector<double>& traces);

const char* irrep_type_name(IrrepType t);

// Compact identifier such as "#2:d2C" used in reports and fibre tables.
std::string irrep_signature(int index, const RealIrrep& rho);
std::string irrep_signature_complex(int index, int degree);

}  // namespace eqb

#endif  // EQB_REPTHEORY_HPP
