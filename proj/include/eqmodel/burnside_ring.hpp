#pragma once

#include <memory>
#include <vector>

#include "eqmodel/linalg.hpp"
#include "eqmodel/subgroup_lattice.hpp"

namespace eqmodel {

/// The rational Burnside ring A(G)⊗Q of one group: its subgroup classes and
/// table of marks. Built once per group and shared by all of its elements.
class BurnsideRing
{
public:
  explicit BurnsideRing(GroupPtr G);

  GroupPtr const &group() const { return classes_.group(); }
  ConjugacyClassTable const &classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }

  /// marks[K][H] = |(G/K)^H|, rows and columns in class order.
  std::vector<std::vector<Rational>> const &marks() const { return marks_; }
  Matrix marks_matrix() const { return Matrix::from_dense(marks_); }

  /// Solves coeffs · marks = target for coeffs.
  std::vector<Rational> solve_marks(std::vector<Rational> const &target) const;

private:
  ConjugacyClassTable classes_;
  std::vector<std::vector<Rational>> marks_;
  Matrix marks_transpose_;
};

using BurnsideRingPtr = std::shared_ptr<BurnsideRing const>;

BurnsideRingPtr make_burnside_ring(GroupPtr const &G);

/// Σ coeffs[i] [G/H_i] over the class representatives H_i.
struct BurnsideElement
{
  BurnsideRingPtr ring;
  std::vector<Rational> coeffs;

  static BurnsideElement zero(BurnsideRingPtr ring);
  /// The transitive G-set [G/H] for class index `cls`.
  static BurnsideElement basis(BurnsideRingPtr ring, std::size_t cls);
  static BurnsideElement unit(BurnsideRingPtr ring);

  bool is_zero() const;

  friend BurnsideElement operator+(BurnsideElement a, BurnsideElement const &b);
  friend BurnsideElement operator-(BurnsideElement a, BurnsideElement const &b);
  friend BurnsideElement operator*(Rational const &c, BurnsideElement a);
  friend bool operator==(BurnsideElement const &a, BurnsideElement const &b)
  {
    return a.coeffs == b.coeffs;
  }
};

std::vector<std::vector<Rational>> table_of_marks(BurnsideRing const &ring);

std::vector<Rational> marks_hom(BurnsideElement const &x);
BurnsideElement burnside_multiply(BurnsideElement const &x, BurnsideElement const &y);
BurnsideElement idempotent(BurnsideRingPtr const &ring, std::size_t cls);
BurnsideElement family_idempotent(BurnsideRingPtr const &ring, Subgroup const &H, bool strict);

/// The subgroup K ≤ G as a group in its own right, with generators chosen
/// greedily from its members. Elements of the result are the same
/// permutations as the corresponding members of K.
FiniteGroup subgroup_as_group(Subgroup const &K);

/// ι_K^*: A(G)⊗Q → A(K)⊗Q. The result lives in `target`, whose group must
/// be subgroup_as_group(K).
BurnsideElement restriction(Subgroup const &K, BurnsideElement const &x,
                            BurnsideRingPtr const &target);
BurnsideElement restriction(Subgroup const &K, BurnsideElement const &x);

}  // namespace eqmodel
