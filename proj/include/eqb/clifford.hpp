#ifndef EQB_CLIFFORD_HPP
#define EQB_CLIFFORD_HPP

#include <string>
#include <utility>
#include <vector>

#include "eqb/error.hpp"

namespace eqb {

enum class CliffordBase { R, C, H, RR, HH };  // RR = R(+)R, HH = H(+)H

struct CliffordType {
  CliffordBase base;
  int matrix_size;  // N in M_N(base), per simple factor
  int p, q;

  bool simple() const {
    return base == CliffordBase::R || base == CliffordBase::C ||
           base == CliffordBase::H;
  }
};

// Classification of the real algebra with p positive and q negative
// generator squares, from the eight seed types extended two steps at a time
// by the matrix-doubling rule.
CliffordType clifford_type(int p, int q);

// True iff [p-q] mod 8 lies in {0,2,3,4,6,7}: exactly one simple module,
// hence exactly one irreducible odd representation of the monomial group.
bool has_unique_odd_irrep(int p, int q);

// (real dimension, commutant size) of every irreducible odd representation
// of the monomial group, read off the simple-module structure.
std::vector<std::pair<int, int>> odd_irrep_profile(int p, int q);

std::string clifford_base_name(CliffordBase b);

}  // namespace eqb

#endif  // EQB_CLIFFORD_HPP
