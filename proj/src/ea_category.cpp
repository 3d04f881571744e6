#include "eqmodel/ea_category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqmodel {

EaStructure::EaStructure(GroupPtr W, int n_max) : w_(std::move(W)), n_max_(n_max)
{
  if (n_max < 0)
    throw Error("n_max must be non-negative");
  powers_.push_back(1);
  for (int k = 0; k < 2 * n_max + 2; ++k)
    powers_.push_back(powers_.back() * w_->order());
}

std::size_t EaStructure::points(int i) const
{
  return powers_.at(static_cast<std::size_t>(i));
}

std::size_t EaStructure::hom_dim(int i, int j) const
{
  return (i + j == 0) ? 1 : powers_.at(static_cast<std::size_t>(i + j - 1));
}

std::vector<std::size_t> EaStructure::point_tuple(int i, std::size_t p) const
{
  std::vector<std::size_t> t(static_cast<std::size_t>(i));
  for (std::size_t k = t.size(); k-- > 0;) {
    t[k] = p % order();
    p /= order();
  }
  return t;
}

std::size_t EaStructure::point_index(std::vector<std::size_t> const &t) const
{
  std::size_t p = 0;
  for (auto x : t)
    p = p * order() + x;
  return p;
}

std::size_t EaStructure::act_on_point(std::size_t g, int i, std::size_t p) const
{
  auto t = point_tuple(i, p);
  for (auto &x : t)
    x = w_->multiply(g, x);
  return point_index(t);
}

std::size_t EaStructure::orbit_index(std::vector<std::size_t> const &tuple) const
{
  if (tuple.empty())
    return 0;
  std::size_t g = w_->inverse(tuple[0]);
  std::size_t index = 0;
  for (std::size_t k = 1; k < tuple.size(); ++k)
    index = index * order() + w_->multiply(g, tuple[k]);
  return index;
}

std::size_t EaStructure::orbit_index(int i, std::size_t x, int j, std::size_t y) const
{
  auto t = point_tuple(i, x);
  auto u = point_tuple(j, y);
  t.insert(t.end(), u.begin(), u.end());
  return orbit_index(t);
}

std::pair<std::size_t, std::size_t> EaStructure::representative(int i, int j, std::size_t f) const
{
  if (i + j == 0)
    return {0, 0};
  // tuple = (e, digits of f)
  auto rest = point_tuple(i + j - 1, f);
  std::vector<std::size_t> t{FiniteGroup::kIdentity};
  t.insert(t.end(), rest.begin(), rest.end());
  std::vector<std::size_t> x(t.begin(), t.begin() + i), y(t.begin() + i, t.end());
  return {point_index(x), point_index(y)};
}

SparseVec EaStructure::apply(int i, int j, std::size_t f, std::size_t x) const
{
  auto [x0, y0] = representative(i, j, f);
  if (i >= 1) {
    // the unique h with h·x0 = x, if any (x0 starts with e)
    std::size_t h = point_tuple(i, x)[0];
    if (act_on_point(h, i, x0) != x)
      return {};
    return SparseVec::unit(act_on_point(h, j, y0));
  }
  if (j == 0)
    return SparseVec::unit(0);
  std::vector<SparseVec::Entry> out;
  for (std::size_t h = 0; h < order(); ++h)
    out.emplace_back(act_on_point(h, j, y0), 1);
  return SparseVec::from_unsorted(std::move(out));
}

Matrix EaStructure::as_matrix(int i, int j, std::size_t f) const
{
  std::vector<SparseVec> cols;
  for (std::size_t x = 0; x < points(i); ++x)
    cols.push_back(apply(i, j, f, x));
  return Matrix::from_columns(points(j), std::move(cols));
}

SparseVec EaStructure::compose_basis(int i, int j, int k, std::size_t g, std::size_t f) const
{
  auto [x0, y0] = representative(i, j, f);
  auto [y1, z1] = representative(j, k, g);
  std::size_t nf = (i + j == 0) ? 1 : order();
  std::size_t ng = (j + k == 0) ? 1 : order();
  std::map<std::size_t, std::size_t> hits;
  std::size_t y1_head = (j >= 1) ? point_tuple(j, y1)[0] : 0;
  for (std::size_t h = 0; h < nf; ++h) {
    std::size_t x = act_on_point(h, i, x0);
    std::size_t y = act_on_point(h, j, y0);
    if (j >= 1) {
      std::size_t h2 = w_->multiply(point_tuple(j, y)[0], w_->inverse(y1_head));
      if (act_on_point(h2, j, y1) != y)
        continue;
      ++hits[orbit_index(i, x, k, act_on_point(h2, k, z1))];
    } else {
      for (std::size_t h2 = 0; h2 < ng; ++h2)
        ++hits[orbit_index(i, x, k, act_on_point(h2, k, z1))];
    }
  }
  std::size_t orbit_size = (i + k == 0) ? 1 : order();
  SparseVec out;
  for (auto const &[idx, count] : hits) {
    Rational q(static_cast<unsigned long>(count), static_cast<unsigned long>(orbit_size));
    q.canonicalize();  // the two-argument constructor does not reduce
    out.push_back(idx, q);
  }
  return out;
}

SparseVec EaStructure::tensor_basis(int a, int b, int c, int d, std::size_t f, std::size_t g) const
{
  auto [x, y] = representative(a, c, f);
  auto [x2, y2] = representative(b, d, g);
  std::size_t nf = (a + c == 0) ? 1 : order();
  std::size_t ng = (b + d == 0) ? 1 : order();
  std::set<std::size_t> orbits;
  for (std::size_t h1 = 0; h1 < nf; ++h1) {
    std::size_t hx = act_on_point(h1, a, x), hy = act_on_point(h1, c, y);
    for (std::size_t h2 = 0; h2 < ng; ++h2) {
      std::size_t src = hx * points(b) + act_on_point(h2, b, x2);
      std::size_t tgt = hy * points(d) + act_on_point(h2, d, y2);
      orbits.insert(orbit_index(a + b, src, c + d, tgt));
    }
  }
  SparseVec out;
  for (auto o : orbits)
    out.push_back(o, 1);
  return out;
}

SparseVec EaStructure::identity(int a) const
{
  std::set<std::size_t> orbits;
  for (std::size_t s = 0; s < points(a); ++s)
    orbits.insert(orbit_index(a, s, a, s));
  SparseVec out;
  for (auto o : orbits)
    out.push_back(o, 1);
  return out;
}

SparseVec EaStructure::symmetry(int a, int b) const
{
  std::set<std::size_t> orbits;
  for (std::size_t x = 0; x < points(a); ++x)
    for (std::size_t x2 = 0; x2 < points(b); ++x2)
      orbits.insert(orbit_index(a + b, x * points(b) + x2, b + a, x2 * points(a) + x));
  SparseVec out;
  for (auto o : orbits)
    out.push_back(o, 1);
  return out;
}

std::size_t EaStructure::right_translation(std::size_t w) const
{
  return orbit_index(1, FiniteGroup::kIdentity, 1, w);
}

std::size_t EaStructure::translate_to(int i, std::size_t s) const
{
  return orbit_index(1, FiniteGroup::kIdentity, i, s);
}

std::size_t EaStructure::augmentation() const
{
  return orbit_index(1, FiniteGroup::kIdentity, 0, 0);
}

GRepresentation EaStructure::object_rep(int i) const
{
  std::vector<std::vector<std::size_t>> images;
  for (auto g : w_->generator_indices()) {
    std::vector<std::size_t> img(points(i));
    for (std::size_t p = 0; p < points(i); ++p)
      img[p] = act_on_point(g, i, p);
    images.push_back(std::move(img));
  }
  return GRepresentation::permutation(w_, points(i), images);
}

EaCategory build_Ea_for_group(GroupPtr const &W, int n_max)
{
  auto S = std::make_shared<EaStructure const>(W, n_max);
  std::vector<std::string> labels;
  std::vector<ChainComplex> homs;
  std::vector<SparseVec> ids;
  for (int a = 0; a <= n_max; ++a) {
    labels.push_back(std::to_string(a));
    ids.push_back(S->identity(a));
    for (int b = 0; b <= n_max; ++b)
      homs.push_back(ChainComplex::concentrated(GRepresentation::trivial(trivial_group(), S->hom_dim(a, b)), 0));
  }
  auto compose = [S](int a, int b, int c, std::size_t g, std::size_t f) {
    return S->compose_basis(a, b, c, g, f);
  };
  auto cat = std::make_shared<DGCategory>(std::move(labels), std::move(homs), compose, std::move(ids));
  cat->ea = S;

  MonoidalDGStructure M;
  M.unit = 0;
  M.tensor_objects = [n_max](int a, int b) -> std::optional<int> {
    if (a + b > n_max)
      return std::nullopt;
    return a + b;
  };
  M.tensor_basis = [S](int a, int b, int c, int d, std::size_t f, std::size_t g) {
    return S->tensor_basis(a, b, c, d, f, g);
  };
  M.symmetry = [S](int a, int b) { return S->symmetry(a, b); };
  return EaCategory{std::move(cat), std::move(M), S};
}

EaCategory build_Ea(GroupPtr const &G, Subgroup const &H, int n_max)
{
  return build_Ea_for_group(make_group(weyl_group(G, H)), n_max);
}

}  // namespace eqmodel
