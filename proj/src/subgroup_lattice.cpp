#include "eqmodel/subgroup_lattice.hpp"

#include <algorithm>
#include <set>

namespace eqmodel {

bool Subgroup::contains(std::size_t element) const
{
  return std::binary_search(members.begin(), members.end(), element);
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

bool canonical_less(Subgroup const &a, Subgroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.members < b.members;
}

namespace {

std::vector<std::size_t> closure(FiniteGroup const &G, std::vector<std::size_t> const &gens)
{
  std::vector<bool> in(G.order(), false);
  std::vector<std::size_t> members{FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    std::size_t x = members[head];
    for (auto g : gens) {
      std::size_t y = G.multiply(g, x);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

void check_parent(GroupPtr const &G, Subgroup const &H)
{
  if (!H.parent || !(*H.parent == *G))
    throw Error("subgroup does not belong to this group");
}

}  // namespace

Subgroup generated_subgroup(GroupPtr const &G, std::vector<std::size_t> const &generators)
{
  return Subgroup{G, closure(*G, generators)};
}

Subgroup trivial_subgroup(GroupPtr const &G)
{
  return Subgroup{G, {FiniteGroup::kIdentity}};
}

Subgroup whole_group(GroupPtr const &G)
{
  std::vector<std::size_t> all(G->order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return Subgroup{G, std::move(all)};
}

Subgroup make_subgroup(GroupPtr const &G, std::vector<std::size_t> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != FiniteGroup::kIdentity)
    throw Error("subgroup must contain the identity");
  if (members.back() >= G->order())
    throw Error("subgroup member out of range");
  if (G->order() % members.size() != 0)
    throw Error("subgroup order does not divide group order");
  Subgroup H{G, std::move(members)};
  for (auto a : H.members) {
    if (!H.contains(G->inverse(a)))
      throw Error("subgroup not closed under inverses");
    for (auto b : H.members)
      if (!H.contains(G->multiply(a, b)))
        throw Error("subgroup not closed under multiplication");
  }
  return H;
}

Subgroup conjugate(Subgroup const &H, std::size_t g)
{
  FiniteGroup const &G = *H.parent;
  std::size_t ginv = G.inverse(g);
  std::vector<std::size_t> members;
  members.reserve(H.order());
  for (auto h : H.members)
    members.push_back(G.multiply(G.multiply(g, h), ginv));
  std::sort(members.begin(), members.end());
  return Subgroup{H.parent, std::move(members)};
}

std::vector<Subgroup> all_subgroups(GroupPtr const &G)
{
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> cyclic_generators;
  for (std::size_t g = 0; g < G->order(); ++g) {
    auto members = closure(*G, {g});
    if (found.insert(members).second)
      cyclic_generators.push_back({g});
  }

  // Every subgroup is a join of cyclic subgroups, so joining the worklist
  // against the cyclic ones reaches the whole lattice.
  std::vector<std::vector<std::size_t>> worklist(found.begin(), found.end());
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    auto const current = worklist[head];
    for (auto const &c : cyclic_generators) {
      if (std::binary_search(current.begin(), current.end(), c.front()))
        continue;
      std::vector<std::size_t> gens = current;
      gens.push_back(c.front());
      auto joined = closure(*G, gens);
      if (found.insert(joined).second)
        worklist.push_back(std::move(joined));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto const &m : found)
    result.push_back(Subgroup{G, m});
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

Subgroup normalizer(GroupPtr const &G, Subgroup const &H)
{
  check_parent(G, H);
  std::vector<std::size_t> members;
  for (std::size_t g = 0; g < G->order(); ++g)
    if (conjugate(H, g) == H)
      members.push_back(g);
  return Subgroup{G, std::move(members)};
}

FiniteGroup weyl_group(GroupPtr const &G, Subgroup const &H)
{
  Subgroup N = normalizer(G, H);

  // Left cosets nH, indexed by their smallest element.
  std::vector<std::size_t> coset_of(G->order(), FiniteGroup::kNone);
  std::size_t ncosets = 0;
  for (auto n : N.members) {
    if (coset_of[n] != FiniteGroup::kNone)
      continue;
    for (auto h : H.members)
      coset_of[G->multiply(n, h)] = ncosets;
    ++ncosets;
  }

  auto action = [&](std::size_t n) {
    std::vector<std::size_t> images(ncosets);
    std::vector<bool> done(ncosets, false);
    for (auto m : N.members) {
      std::size_t c = coset_of[m];
      if (done[c])
        continue;
      done[c] = true;
      images[c] = coset_of[G->multiply(n, m)];
    }
    return Permutation(std::move(images));
  };

  // Greedy generating set of N modulo H.
  std::vector<Permutation> generators;
  std::vector<std::size_t> span_gens = H.members;
  std::vector<std::size_t> span = H.members;
  for (auto n : N.members) {
    if (std::binary_search(span.begin(), span.end(), n))
      continue;
    span_gens.push_back(n);
    span = closure(*G, span_gens);
    generators.push_back(action(n));
  }
  return FiniteGroup::from_generators(ncosets, std::move(generators));
}

bool is_subconjugate(GroupPtr const &G, Subgroup const &K, Subgroup const &H, bool strict)
{
  check_parent(G, K);
  check_parent(G, H);
  if (H.order() % K.order() != 0)
    return false;
  if (strict && K.order() >= H.order())
    return false;
  for (std::size_t g = 0; g < G->order(); ++g)
    if (conjugate(K, g).is_subset_of(H))
      return true;
  return false;
}

// ConjugacyClassTable -------------------------------------------------------

ConjugacyClassTable::ConjugacyClassTable(GroupPtr G) : group_(std::move(G))
{
  auto subgroups = all_subgroups(group_);
  std::vector<bool> assigned(subgroups.size(), false);
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    position[subgroups[i].members] = i;

  // Subgroups arrive in canonical order, so the first unassigned member of
  // each class is its canonical representative and classes come out sorted.
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i])
      continue;
    std::set<std::vector<std::size_t>> orbit;
    for (std::size_t g = 0; g < group_->order(); ++g)
      orbit.insert(conjugate(subgroups[i], g).members);
    std::vector<Subgroup> members;
    for (auto const &m : orbit) {
      assigned[position.at(m)] = true;
      members.push_back(Subgroup{group_, m});
    }
    std::sort(members.begin(), members.end(), canonical_less);
    std::size_t cls = classes_.size();
    for (auto const &m : members)
      index_[m.members] = cls;
    classes_.push_back(subgroups[i]);
    conjugates_.push_back(std::move(members));
  }
}

std::size_t ConjugacyClassTable::class_of(Subgroup const &H) const
{
  auto it = index_.find(H.members);
  if (it == index_.end())
    throw Error("not a subgroup of this group");
  return it->second;
}

std::size_t ConjugacyClassTable::subgroup_count() const
{
  return index_.size();
}

ConjugacyClassTable conjugacy_classes_of_subgroups(GroupPtr const &G)
{
  return ConjugacyClassTable(G);
}

std::vector<std::size_t> family_below(ConjugacyClassTable const &table, Subgroup const &H,
                                      bool strict)
{
  std::vector<std::size_t> family;
  for (std::size_t c = 0; c < table.size(); ++c)
    if (is_subconjugate(table.group(), table.representative(c), H, strict))
      family.push_back(c);
  return family;
}

}  // namespace eqmodel
