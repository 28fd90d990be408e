#ifndef EQB_ORACLES_HPP
#define EQB_ORACLES_HPP

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "eqb/reptheory.hpp"

namespace eqb {

// Equivariant complex bundle on the circle with the conjugation involution,
// recorded by its complete invariant: the rank and the dimensions of the
// -1-eigenspaces of the involution at the two fixed points.
struct CircleBundle {
  int k = 0;        // rank
  int l_minus = 0;  // at the fixed point -1
  int l_plus = 0;   // at the fixed point +1
};

void validate_circle_bundle(const CircleBundle& b);

bool circle_is_trivial(const CircleBundle& b);

// Whether b contains the constant line bundle with the chosen character as a
// direct summand.  nontrivial_character selects the sign character.
bool circle_has_trivial_summand(const CircleBundle& b,
                                bool nontrivial_character);

// Monoid subtraction: v embeds in e iff e - v is a valid bundle datum.
bool circle_embeds(const CircleBundle& v, const CircleBundle& e);

// The invariant is complete and the monoid cancellative, so a stable
// isomorphism always forces an isomorphism on this space.
bool circle_stable_iso_is_iso(const CircleBundle& b1, const CircleBundle& b2,
                              const CircleBundle& v);

CircleBundle circle_direct_sum(const CircleBundle& a, const CircleBundle& b);

// An explicit real representation: one matrix per group element.
struct ExplicitRep {
  GroupPtr group;
  std::vector<Eigen::MatrixXd> matrices;  // indexed by element
};

// Builds the element-indexed table from matrices for a generating set,
// checking single-valuedness of all products at tolerance 1e-9.
ExplicitRep rep_from_generators(const GroupPtr& g,
                                const std::map<int, Eigen::MatrixXd>& gens);

ExplicitRep regular_rep(const GroupPtr& g);
ExplicitRep direct_sum(const ExplicitRep& a, const ExplicitRep& b);

// Multiplicities of each real irrep via two independent routes: character
// inner products from traces, and ranks of the isotypic projectors
// P = (dim/(c|G|)) sum_g chi(g) rho(g).  Both must agree.
std::vector<int> brute_decompose(const ExplicitRep& rep,
                                 const RealIrrepSet& set,
                                 double tol = 1e-6);

// Real character values recovered from the regular representation alone:
// chi(g) = (c/dim) tr(reg(g) P_rho).  Used to cross-check computed tables.
std::vector<double> character_from_regular_rep(const RealIrrepSet& set,
                                               const RealIrrep& rho);

}  // namespace eqb

#endif  // EQB_ORACLES_HPP
