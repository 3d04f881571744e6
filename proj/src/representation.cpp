#include "eqmodel/representation.hpp"

#include <mutex>
#include <stdexcept>

#include <omp.h>

namespace eqmodel {

GroupPtr const &trivial_group()
{
  static GroupPtr const G = make_group(named_group("cyclic-1"));
  return G;
}

struct GRepresentation::Data
{
  GroupPtr group;
  std::size_t dim = 0;
  std::vector<Matrix> generators;
  mutable std::once_flag once;
  mutable std::vector<Matrix> elements;

  void compute_elements() const
  {
    FiniteGroup const &G = *group;
    elements.assign(G.order(), Matrix());
    elements[FiniteGroup::kIdentity] = Matrix::identity(dim);
    for (auto x : G.bfs_order()) {
      if (x == FiniteGroup::kIdentity)
        continue;
      auto const &step = G.step(x);
      elements[x] = generators[step.generator] * elements[step.parent];
    }
  }
};

GRepresentation::GRepresentation() : GRepresentation(trivial_group(), 0, {}, false) {}

GRepresentation::GRepresentation(GroupPtr G, std::size_t dim, std::vector<Matrix> generator_action,
                                 bool validate)
{
  if (!G)
    throw Error("representation without a group");
  if (generator_action.size() != G->generators().size())
    throw Error("representation needs one matrix per group generator");
  for (auto const &m : generator_action)
    if (m.rows() != dim || m.cols() != dim)
      throw Error("representation matrix has wrong size");

  auto data = std::make_shared<Data>();
  data->group = std::move(G);
  data->dim = dim;
  data->generators = std::move(generator_action);

  if (validate && dim > 0) {
    FiniteGroup const &grp = *data->group;
    std::call_once(data->once, [&] { data->compute_elements(); });
    for (std::size_t x = 0; x < grp.order(); ++x)
      for (std::size_t k = 0; k < grp.generators().size(); ++k) {
        std::size_t y = grp.multiply(grp.generator_indices()[k], x);
        if (!(data->generators[k] * data->elements[x] == data->elements[y]))
          throw Error("generator matrices do not define a representation");
      }
  }
  data_ = std::move(data);
}

GRepresentation GRepresentation::trivial(GroupPtr G, std::size_t dim)
{
  std::vector<Matrix> gens(G->generators().size(), Matrix::identity(dim));
  return GRepresentation(std::move(G), dim, std::move(gens), false);
}

GRepresentation GRepresentation::regular(GroupPtr const &G)
{
  std::vector<std::vector<std::size_t>> images;
  for (auto g : G->generator_indices()) {
    std::vector<std::size_t> img(G->order());
    for (std::size_t h = 0; h < G->order(); ++h)
      img[h] = G->multiply(g, h);
    images.push_back(std::move(img));
  }
  return permutation(G, G->order(), images);
}

GRepresentation GRepresentation::permutation(GroupPtr G, std::size_t points,
                                             std::vector<std::vector<std::size_t>> const &images)
{
  std::vector<Matrix> gens;
  for (auto const &img : images) {
    if (img.size() != points)
      throw Error("permutation action has wrong number of points");
    gens.push_back(Matrix::permutation(img, points));
  }
  return GRepresentation(std::move(G), points, std::move(gens), false);
}

GRepresentation GRepresentation::on_cosets(GroupPtr const &G, Subgroup const &H)
{
  std::vector<std::size_t> coset_of(G->order(), FiniteGroup::kNone);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < G->order(); ++g) {
    if (coset_of[g] != FiniteGroup::kNone)
      continue;
    for (auto h : H.members)
      coset_of[G->multiply(g, h)] = reps.size();
    reps.push_back(g);
  }
  std::vector<std::vector<std::size_t>> images;
  for (auto s : G->generator_indices()) {
    std::vector<std::size_t> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = coset_of[G->multiply(s, reps[c])];
    images.push_back(std::move(img));
  }
  return permutation(G, reps.size(), images);
}

GroupPtr const &GRepresentation::group() const
{
  return data_->group;
}

std::size_t GRepresentation::dim() const
{
  return data_->dim;
}

std::vector<Matrix> const &GRepresentation::generator_action() const
{
  return data_->generators;
}

Matrix const &GRepresentation::action(std::size_t element) const
{
  return element_actions().at(element);
}

std::vector<Matrix> const &GRepresentation::element_actions() const
{
  std::call_once(data_->once, [this] { data_->compute_elements(); });
  return data_->elements;
}

bool GRepresentation::same_group(GRepresentation const &other) const
{
  return group() == other.group() || *group() == *other.group();
}

namespace {

void require_same_group(GRepresentation const &v, GRepresentation const &w)
{
  if (!v.same_group(w))
    throw Error("representations over different groups");
}

Rational trace(Matrix const &m)
{
  Rational t = 0;
  if (m.is_identity())
    return static_cast<unsigned long>(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    t += m.at(j, j);
  return t;
}

}  // namespace

GRepresentation tensor(GRepresentation const &v, GRepresentation const &w)
{
  require_same_group(v, w);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < v.generator_action().size(); ++k)
    gens.push_back(kron(v.generator_action()[k], w.generator_action()[k]));
  return GRepresentation(v.group(), v.dim() * w.dim(), std::move(gens), false);
}

GRepresentation direct_sum(GRepresentation const &v, GRepresentation const &w)
{
  require_same_group(v, w);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < v.generator_action().size(); ++k)
    gens.push_back(direct_sum(v.generator_action()[k], w.generator_action()[k]));
  return GRepresentation(v.group(), v.dim() + w.dim(), std::move(gens), false);
}

GRepresentation hom(GRepresentation const &v, GRepresentation const &w)
{
  require_same_group(v, w);
  FiniteGroup const &G = *v.group();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    std::size_t ginv = G.inverse(G.generator_indices()[k]);
    gens.push_back(kron(v.action(ginv).transpose(), w.generator_action()[k]));
  }
  return GRepresentation(v.group(), v.dim() * w.dim(), std::move(gens), false);
}

GRepresentation restrict_to(GRepresentation const &v, Matrix const &basis)
{
  std::vector<Matrix> gens;
  for (auto const &g : v.generator_action()) {
    auto m = solve(basis, g * basis);
    if (!m)
      throw Error("subspace is not invariant");
    gens.push_back(std::move(*m));
  }
  return GRepresentation(v.group(), basis.cols(), std::move(gens), false);
}

GRepresentation quotient_of(GRepresentation const &v, Cokernel const &q)
{
  std::vector<Matrix> gens;
  for (auto const &g : v.generator_action())
    gens.push_back(q.quotient * g * q.section);
  return GRepresentation(v.group(), q.dim(), std::move(gens), false);
}

Matrix average_projector(GRepresentation const &v)
{
  auto const &mats = v.element_actions();
  std::size_t const n = mats.size();
  std::size_t const dim = v.dim();

  std::vector<Matrix> partial(static_cast<std::size_t>(omp_get_max_threads()), Matrix(dim, dim));
#pragma omp parallel
  {
    Matrix acc(dim, dim);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      acc = acc + mats[static_cast<std::size_t>(i)];
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(acc);
  }

  Matrix sum(dim, dim);
  for (auto const &p : partial)
    sum = sum + p;
  return sum.scaled(Rational(1, static_cast<unsigned long>(n)));
}

Matrix average_projector_serial(GRepresentation const &v)
{
  auto const &mats = v.element_actions();
  Matrix sum(v.dim(), v.dim());
  for (auto const &m : mats)
    sum = sum + m;
  return sum.scaled(Rational(1, static_cast<unsigned long>(mats.size())));
}

Matrix fixed_subspace_basis(GRepresentation const &v)
{
  if (v.group()->order() == 1)
    return Matrix::identity(v.dim());
  return image_basis(average_projector(v));
}

std::size_t fixed_dimension(GRepresentation const &v)
{
  if (v.group()->order() == 1)
    return v.dim();
  return rank(average_projector(v));
}

std::size_t equivariant_hom_dimension(GRepresentation const &v, GRepresentation const &w)
{
  require_same_group(v, w);
  FiniteGroup const &G = *v.group();
  Rational sum = 0;
  for (std::size_t g = 0; g < G.order(); ++g)
    sum += trace(v.action(G.inverse(g))) * trace(w.action(g));
  sum /= static_cast<unsigned long>(G.order());
  if (sum.get_den() != 1 || sum < 0)
    throw std::logic_error("character inner product is not a natural number");
  return sum.get_num().get_ui();
}

bool is_equivariant(Matrix const &f, GRepresentation const &source, GRepresentation const &target)
{
  if (f.rows() != target.dim() || f.cols() != source.dim())
    return false;
  for (std::size_t k = 0; k < source.generator_action().size(); ++k)
    if (!(target.generator_action()[k] * f == f * source.generator_action()[k]))
      return false;
  return true;
}

}  // namespace eqmodel
