#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eqmodel/perm_group.hpp"

namespace eqmodel {

/// A subgroup, as the sorted element indices of its parent group.
struct Subgroup
{
  GroupPtr parent;
  std::vector<std::size_t> members;

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t element) const;
  bool is_subset_of(Subgroup const &other) const;

  friend bool operator==(Subgroup const &a, Subgroup const &b) { return a.members == b.members; }
};

/// Canonical comparison: order first, then the member lists lexicographically.
bool canonical_less(Subgroup const &a, Subgroup const &b);

Subgroup generated_subgroup(GroupPtr const &G, std::vector<std::size_t> const &generators);
Subgroup trivial_subgroup(GroupPtr const &G);
Subgroup whole_group(GroupPtr const &G);
/// Throws Error unless `members` is a subgroup of G (closure, identity, Lagrange).
Subgroup make_subgroup(GroupPtr const &G, std::vector<std::size_t> members);

/// g H g^-1
Subgroup conjugate(Subgroup const &H, std::size_t g);

/// Every subgroup of G, in canonical order.
std::vector<Subgroup> all_subgroups(GroupPtr const &G);

Subgroup normalizer(GroupPtr const &G, Subgroup const &H);

/// N_G H / H acting on the left cosets of H in N_G H.
FiniteGroup weyl_group(GroupPtr const &G, Subgroup const &H);

bool is_subconjugate(GroupPtr const &G, Subgroup const &K, Subgroup const &H, bool strict);

class ConjugacyClassTable
{
public:
  explicit ConjugacyClassTable(GroupPtr G);

  GroupPtr const &group() const { return group_; }
  std::size_t size() const { return classes_.size(); }

  /// Canonical representative of class i (minimal member list).
  Subgroup const &representative(std::size_t i) const { return classes_.at(i); }
  std::vector<Subgroup> const &representatives() const { return classes_; }
  /// All subgroups conjugate to representative i, in canonical order.
  std::vector<Subgroup> const &conjugates(std::size_t i) const { return conjugates_.at(i); }

  std::size_t class_of(Subgroup const &H) const;
  std::size_t subgroup_count() const;

private:
  GroupPtr group_;
  std::vector<Subgroup> classes_;
  std::vector<std::vector<Subgroup>> conjugates_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

ConjugacyClassTable conjugacy_classes_of_subgroups(GroupPtr const &G);

/// Class indices of [<=_G H] (or [<_G H] when strict), ascending.
std::vector<std::size_t> family_below(ConjugacyClassTable const &table, Subgroup const &H,
                                      bool strict);

}  // namespace eqmodel
