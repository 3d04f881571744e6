#include "eqmodel/burnside_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqmodel {

namespace {

// Left cosets gH as a map element -> coset id, plus one representative each.
struct CosetSpace
{
  std::vector<std::size_t> coset_of;
  std::vector<std::size_t> representative;
};

CosetSpace left_cosets(FiniteGroup const &G, Subgroup const &H)
{
  CosetSpace cs;
  cs.coset_of.assign(G.order(), FiniteGroup::kNone);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (cs.coset_of[g] != FiniteGroup::kNone)
      continue;
    std::size_t id = cs.representative.size();
    for (auto h : H.members)
      cs.coset_of[G.multiply(g, h)] = id;
    cs.representative.push_back(g);
  }
  return cs;
}

}  // namespace

BurnsideRing::BurnsideRing(GroupPtr G) : classes_(std::move(G))
{
  FiniteGroup const &grp = *classes_.group();
  std::size_t n = classes_.size();
  marks_.assign(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    Subgroup const &K = classes_.representative(k);
    CosetSpace cs = left_cosets(grp, K);
    for (std::size_t h = 0; h < n; ++h) {
      Subgroup const &H = classes_.representative(h);
      std::size_t fixed = 0;
      for (auto g : cs.representative) {
        // H fixes gK iff H ⊆ gKg^-1
        if (H.is_subset_of(conjugate(K, g)))
          ++fixed;
      }
      marks_[k][h] = static_cast<unsigned long>(fixed);
    }
  }
  marks_transpose_ = marks_matrix().transpose();
}

std::vector<Rational> BurnsideRing::solve_marks(std::vector<Rational> const &target) const
{
  if (target.size() != rank())
    throw std::invalid_argument("marks vector has wrong length");
  auto x = solve(marks_transpose_, SparseVec::from_dense(target));
  if (!x)
    throw std::logic_error("table of marks is singular");
  std::vector<Rational> coeffs(rank());
  for (auto const &[i, c] : *x)
    coeffs[i] = c;
  return coeffs;
}

BurnsideRingPtr make_burnside_ring(GroupPtr const &G)
{
  return std::make_shared<BurnsideRing const>(G);
}

// BurnsideElement -----------------------------------------------------------

BurnsideElement BurnsideElement::zero(BurnsideRingPtr ring)
{
  std::size_t n = ring->rank();
  return BurnsideElement{std::move(ring), std::vector<Rational>(n)};
}

BurnsideElement BurnsideElement::basis(BurnsideRingPtr ring, std::size_t cls)
{
  if (cls >= ring->rank())
    throw std::out_of_range("subgroup class index out of range");
  auto x = zero(std::move(ring));
  x.coeffs[cls] = 1;
  return x;
}

BurnsideElement BurnsideElement::unit(BurnsideRingPtr ring)
{
  std::size_t top = ring->rank() - 1;
  return basis(std::move(ring), top);
}

bool BurnsideElement::is_zero() const
{
  return std::all_of(coeffs.begin(), coeffs.end(), [](Rational const &c) { return c == 0; });
}

namespace {

void check_same_ring(BurnsideElement const &a, BurnsideElement const &b)
{
  if (a.ring != b.ring && !(*a.ring->group() == *b.ring->group()))
    throw Error("Burnside elements over different groups");
}

}  // namespace

BurnsideElement operator+(BurnsideElement a, BurnsideElement const &b)
{
  check_same_ring(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    a.coeffs[i] += b.coeffs[i];
  return a;
}

BurnsideElement operator-(BurnsideElement a, BurnsideElement const &b)
{
  check_same_ring(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    a.coeffs[i] -= b.coeffs[i];
  return a;
}

BurnsideElement operator*(Rational const &c, BurnsideElement a)
{
  for (auto &x : a.coeffs)
    x *= c;
  return a;
}

std::vector<std::vector<Rational>> table_of_marks(BurnsideRing const &ring)
{
  return ring.marks();
}

std::vector<Rational> marks_hom(BurnsideElement const &x)
{
  auto const &m = x.ring->marks();
  std::size_t n = x.ring->rank();
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x.coeffs[k] == 0)
      continue;
    for (std::size_t h = 0; h < n; ++h)
      v[h] += x.coeffs[k] * m[k][h];
  }
  return v;
}

BurnsideElement burnside_multiply(BurnsideElement const &x, BurnsideElement const &y)
{
  check_same_ring(x, y);
  auto mx = marks_hom(x);
  auto my = marks_hom(y);
  for (std::size_t i = 0; i < mx.size(); ++i)
    mx[i] *= my[i];
  return BurnsideElement{x.ring, x.ring->solve_marks(mx)};
}

BurnsideElement idempotent(BurnsideRingPtr const &ring, std::size_t cls)
{
  if (cls >= ring->rank())
    throw std::out_of_range("subgroup class index out of range");
  std::vector<Rational> indicator(ring->rank());
  indicator[cls] = 1;
  return BurnsideElement{ring, ring->solve_marks(indicator)};
}

BurnsideElement family_idempotent(BurnsideRingPtr const &ring, Subgroup const &H, bool strict)
{
  auto e = BurnsideElement::zero(ring);
  for (auto cls : family_below(ring->classes(), H, strict))
    e = e + idempotent(ring, cls);
  return e;
}

FiniteGroup subgroup_as_group(Subgroup const &K)
{
  FiniteGroup const &G = *K.parent;
  std::vector<Permutation> generators;
  std::vector<std::size_t> span{FiniteGroup::kIdentity};
  std::vector<std::size_t> gens;
  for (auto k : K.members) {
    if (std::binary_search(span.begin(), span.end(), k))
      continue;
    gens.push_back(k);
    span = generated_subgroup(K.parent, gens).members;
    generators.push_back(G.element(k));
  }
  return FiniteGroup::from_generators(G.degree(), std::move(generators));
}

BurnsideElement restriction(Subgroup const &K, BurnsideElement const &x,
                            BurnsideRingPtr const &target)
{
  GroupPtr const &Gp = x.ring->group();
  FiniteGroup const &G = *Gp;
  if (!K.parent || !(*K.parent == G))
    throw Error("restriction: K is not a subgroup of G");
  FiniteGroup const &Kgrp = *target->group();
  if (Kgrp.order() != K.order())
    throw Error("restriction: target ring is not over K");

  auto result = BurnsideElement::zero(target);
  for (std::size_t cls = 0; cls < x.ring->rank(); ++cls) {
    if (x.coeffs[cls] == 0)
      continue;
    Subgroup const &H = x.ring->classes().representative(cls);
    CosetSpace cs = left_cosets(G, H);
    std::vector<bool> seen(cs.representative.size(), false);
    for (std::size_t c = 0; c < cs.representative.size(); ++c) {
      if (seen[c])
        continue;
      for (auto k : K.members)
        seen[cs.coset_of[G.multiply(k, cs.representative[c])]] = true;

      // Stab_K(gH) = K ∩ gHg^-1
      Subgroup conj = conjugate(H, cs.representative[c]);
      std::vector<std::size_t> stab;
      for (auto k : K.members)
        if (conj.contains(k))
          stab.push_back(Kgrp.index_of(G.element(k)));
      Subgroup S{target->group(), {}};
      std::sort(stab.begin(), stab.end());
      S.members = std::move(stab);
      result.coeffs[target->classes().class_of(S)] += x.coeffs[cls];
    }
  }
  return result;
}

BurnsideElement restriction(Subgroup const &K, BurnsideElement const &x)
{
  return restriction(K, x, make_burnside_ring(make_group(subgroup_as_group(K))));
}

}  // namespace eqmodel
