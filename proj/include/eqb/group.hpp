#ifndef EQB_GROUP_HPP
#define EQB_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqb/error.hpp"

namespace eqb {

// An explicit finite group given by its multiplication table.  Elements are
// dense indices 0..order-1.  All groups in scope have order <= 128, so the
// table representation keeps every check exhaustive.  Immutable after
// construction.
class FiniteGroup {
 public:
  // Validates the group axioms (throws Error on violation).  If `t` is set
  // it must be a central involution distinct from the identity.
  static std::shared_ptr<const FiniteGroup> from_table(
      int order, std::vector<int> mult_row_major,
      std::optional<int> t = std::nullopt,
      std::vector<std::string> labels = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return mult_[a * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  std::optional<int> t() const { return t_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return mult_; }

  int power(int a, int n) const;
  int element_order(int a) const;
  int conjugate(int g, int x) const;  // g x g^-1
  bool is_central(int a) const;
  std::vector<int> center() const;

 private:
  FiniteGroup() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::optional<int> t_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup as a sorted member set of a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains identity

  bool contains(int g) const;
};

// Subgroup materialized as its own FiniteGroup.  to_parent[i] is the parent
// index of element i; the identity is always index 0.
struct MaterializedSubgroup {
  GroupPtr group;
  std::vector<int> to_parent;

  int to_sub(int parent_index) const;
};

GroupPtr make_cyclic(int n, std::optional<int> t_at = std::nullopt);
GroupPtr make_dihedral8();
GroupPtr make_quaternion8();
GroupPtr make_clifford_group(int p, int q);
// gamma is given per element of G with values in {0,1}; must be a
// homomorphism to Z/2.  The result has order 4*|G| and t = [2].
GroupPtr make_semidirect_z4(const GroupPtr& g, const std::vector<int>& gamma);
GroupPtr make_trivial();

// Index of element ([j], g) in the semidirect product built above.
int semidirect_index(int j, int g_index);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup full_subgroup(const GroupPtr& g);
bool is_subgroup(const Subgroup& s);
bool is_normal(const Subgroup& s);
MaterializedSubgroup subgroup_as_group(const Subgroup& s);
Subgroup conjugate_subgroup(const Subgroup& s, int g);

// Quotient by a normal subgroup; coset representatives are minimal element
// indices and cosets are ordered by representative.
GroupPtr quotient_group(const GroupPtr& g, const Subgroup& normal);

// Backtracking search on generator images; feasible for order <= 128.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b);
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Small generating set found greedily (each step at least doubles the
// generated subgroup).
std::vector<int> small_generating_set(const FiniteGroup& g);

}  // namespace eqb

#endif  // EQB_GROUP_HPP
