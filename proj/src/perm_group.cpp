#include "eqmodel/perm_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace eqmodel {

// Permutation ---------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<std::size_t>> const &cycles)
{
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = i;
  for (auto const &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k];
      std::size_t to = cycle[(k + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw Error("cycle point out of range");
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw Error("composing permutations of different degree");
  std::vector<std::size_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::string Permutation::to_string() const
{
  std::vector<bool> done(images_.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        out << ' ';
      out << j + 1;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

// FiniteGroup ---------------------------------------------------------------

namespace {

constexpr std::size_t kCayleyLimit = 4096;

}  // namespace

FiniteGroup FiniteGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                         std::size_t order_bound)
{
  if (degree == 0)
    throw Error("group degree must be positive");
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw Error("generator degree does not match group degree");

  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (auto const &g : generators) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > order_bound)
          throw Error("group order exceeds bound " + std::to_string(order_bound));
        queue.push_back(std::move(y));
      }
    }
  }

  FiniteGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);
  G.elements_.assign(seen.begin(), seen.end());

  std::size_t n = G.elements_.size();
  for (auto const &g : G.generators_)
    G.generator_indices_.push_back(G.index_of(g));

  if (n <= kCayleyLimit) {
    G.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        G.cayley_[a * n + b] =
            static_cast<std::uint32_t>(G.index_of(G.elements_[a] * G.elements_[b]));
  }

  G.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    G.inverses_[a] = G.index_of(G.elements_[a].inverse());

  G.steps_.assign(n, Step{kNone, kNone});
  std::vector<bool> reached(n, false);
  reached[kIdentity] = true;
  G.bfs_order_.push_back(kIdentity);
  for (std::size_t head = 0; head < G.bfs_order_.size(); ++head) {
    std::size_t x = G.bfs_order_[head];
    for (std::size_t k = 0; k < G.generators_.size(); ++k) {
      std::size_t y = G.multiply(G.generator_indices_[k], x);
      if (!reached[y]) {
        reached[y] = true;
        G.steps_[y] = Step{x, k};
        G.bfs_order_.push_back(y);
      }
    }
  }
  return G;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const
{
  std::size_t n = elements_.size();
  if (a >= n || b >= n)
    throw std::out_of_range("group element index out of range");
  if (!cayley_.empty())
    return cayley_[a * n + b];
  return index_of(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::inverse(std::size_t a) const
{
  return inverses_.at(a);
}

std::optional<std::size_t> FiniteGroup::find(Permutation const &p) const
{
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it != elements_.end() && *it == p)
    return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

std::size_t FiniteGroup::index_of(Permutation const &p) const
{
  auto i = find(p);
  if (!i)
    throw Error("permutation is not an element of the group");
  return *i;
}

std::vector<std::size_t> FiniteGroup::word(std::size_t element) const
{
  std::vector<std::size_t> w;
  while (element != kIdentity) {
    w.push_back(steps_.at(element).generator);
    element = steps_[element].parent;
  }
  return w;
}

bool FiniteGroup::is_abelian() const
{
  for (auto a : generator_indices_)
    for (auto b : generator_indices_)
      if (multiply(a, b) != multiply(b, a))
        return false;
  return true;
}

GroupPtr make_group(FiniteGroup group)
{
  return std::make_shared<FiniteGroup const>(std::move(group));
}

// Named groups --------------------------------------------------------------

namespace {

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix)
{
  if (name.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  auto digits = name.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    return std::nullopt;
  return n;
}

FiniteGroup cyclic(std::size_t n)
{
  if (n == 1)
    return FiniteGroup::from_generators(1, {});
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = i + 1;
  return FiniteGroup::from_generators(n, {Permutation::from_cycles(n, {cycle})});
}

FiniteGroup klein4()
{
  return FiniteGroup::from_generators(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                          Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
}

FiniteGroup dihedral(std::size_t n)
{
  if (n == 1)
    return cyclic(2);
  if (n == 2)
    return klein4();
  std::vector<std::size_t> rotation(n);
  for (std::size_t i = 0; i < n; ++i)
    rotation[i] = i + 1;
  std::vector<std::vector<std::size_t>> reflection;
  for (std::size_t i = 1, j = n; i < j; ++i, --j)
    reflection.push_back({i, j});
  return FiniteGroup::from_generators(n, {Permutation::from_cycles(n, {rotation}),
                                          Permutation::from_cycles(n, reflection)});
}

FiniteGroup symmetric(std::size_t n)
{
  if (n == 1)
    return FiniteGroup::from_generators(1, {});
  if (n == 2)
    return FiniteGroup::from_generators(2, {Permutation::from_cycles(2, {{1, 2}})});
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = i + 1;
  return FiniteGroup::from_generators(
      n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cycle})});
}

// Left regular representation of {±1, ±i, ±j, ±k}; point 2u+s is the unit u
// (0..3 for 1, i, j, k) with sign s.
FiniteGroup quaternion8()
{
  // unit product table: units[a][b] = (unit, negative?)
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  auto left_mult = [&](int unit) {
    std::vector<std::size_t> images(8);
    for (int p = 0; p < 8; ++p) {
      auto [u, neg] = table[unit][p / 2];
      int sign = (p % 2) ^ neg;
      images[p] = static_cast<std::size_t>(2 * u + sign);
    }
    return Permutation(std::move(images));
  };
  return FiniteGroup::from_generators(8, {left_mult(1), left_mult(2)});
}

}  // namespace

FiniteGroup named_group(std::string_view name)
{
  if (auto n = suffix_number(name, "cyclic-"); n && *n >= 1)
    return cyclic(*n);
  if (auto n = suffix_number(name, "dihedral-"); n && *n >= 2 && *n % 2 == 0)
    return dihedral(*n / 2);
  if (auto n = suffix_number(name, "symmetric-"); n && *n >= 1 && *n <= 5)
    return symmetric(*n);
  if (name == "alternating-4")
    return FiniteGroup::from_generators(4, {Permutation::from_cycles(4, {{1, 2, 3}}),
                                            Permutation::from_cycles(4, {{1, 2}, {3, 4}})});
  if (name == "klein-4")
    return klein4();
  if (name == "quaternion-8")
    return quaternion8();
  throw UnknownGroupError("unknown group name: " + std::string(name));
}

std::vector<std::string> const &corpus_group_names()
{
  static std::vector<std::string> const names{
      "cyclic-1",     "cyclic-2",     "cyclic-3",      "cyclic-4",
      "cyclic-5",     "cyclic-6",     "klein-4",       "symmetric-3",
      "dihedral-8",   "quaternion-8", "alternating-4", "symmetric-4"};
  return names;
}

}  // namespace eqmodel
