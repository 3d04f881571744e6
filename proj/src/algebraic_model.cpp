#include "eqmodel/algebraic_model.hpp"

#include "check_util.hpp"

namespace eqmodel {

using detail::Checker;

namespace {

void check_bounds(GroupPtr const &G, int n_max)
{
  if (G->order() > kMaxModelGroupOrder)
    throw Error("group of order " + std::to_string(G->order()) + " exceeds the model bound " +
                std::to_string(kMaxModelGroupOrder));
  if (n_max < 0)
    throw Error("n_max must be non-negative");
  // the largest hom of the factor for H = e
  std::size_t dim = 1;
  for (int k = 0; k < 2 * n_max - 1; ++k) {
    dim *= G->order();
    if (dim > kMaxEaHomDim)
      throw Error("n_max = " + std::to_string(n_max) + " exceeds the resource bound for a group of order " +
                  std::to_string(G->order()));
  }
}

ModelFactor build_factor(GroupPtr const &G, BurnsideRingPtr const &ring, std::size_t cls, int n_max)
{
  Subgroup const &H = ring->classes().representative(cls);
  GroupPtr W = make_group(weyl_group(G, H));
  return ModelFactor{H, W, build_Ea_for_group(W, n_max), idempotent(ring, cls)};
}

AlgebraicModel model_shell(GroupPtr const &G, int n_max)
{
  check_bounds(G, n_max);
  AlgebraicModel m;
  m.group = G;
  m.n_max = n_max;
  m.burnside = make_burnside_ring(G);
  return m;
}

}  // namespace

AlgebraicModel build_model(GroupPtr const &G, int n_max)
{
  AlgebraicModel m = model_shell(G, n_max);
  std::size_t k = m.burnside->rank();
  std::vector<std::optional<ModelFactor>> slots(k);
  std::vector<std::string> errors(k);
  trivial_group();  // initialize the shared group before the parallel region
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < k; ++c) {
    try {
      slots[c] = build_factor(G, m.burnside, c, n_max);
    } catch (std::exception const &e) {
      errors[c] = e.what();
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (!errors[c].empty())
      throw Error(errors[c]);
    m.factors.push_back(std::move(*slots[c]));
  }
  return m;
}

AlgebraicModel build_model_serial(GroupPtr const &G, int n_max)
{
  AlgebraicModel m = model_shell(G, n_max);
  for (std::size_t c = 0; c < m.burnside->rank(); ++c)
    m.factors.push_back(build_factor(G, m.burnside, c, n_max));
  return m;
}

Report check_model(AlgebraicModel const &model)
{
  auto const &classes = model.burnside->classes();
  Checker count("one factor per class");
  count.record(model.factors.size() == classes.size(), [&] {
    return std::to_string(model.factors.size()) + " factors for " + std::to_string(classes.size()) + " classes";
  });
  Checker weyl("Weyl orders are |N_G H| / |H|");
  Checker orth("idempotents are orthogonal");
  BurnsideElement sum = BurnsideElement::zero(model.burnside);
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &f = model.factors[c];
    std::size_t expect = normalizer(model.group, f.subgroup).members.size() / f.subgroup.members.size();
    weyl.record(f.weyl->order() == expect, [&] { return "class " + std::to_string(c); });
    sum = sum + f.idempotent;
    for (std::size_t d = 0; d < model.factors.size(); ++d) {
      auto prod = burnside_multiply(f.idempotent, model.factors[d].idempotent);
      bool ok = (c == d) ? prod == f.idempotent : prod.is_zero();
      orth.record(ok, [&] { return "classes " + tuple_string({c, d}); });
    }
  }
  Checker unit("idempotents sum to the unit");
  unit.record(sum == BurnsideElement::unit(model.burnside), [] { return std::string("sum differs from [G/G]"); });
  Report r;
  r.checks = {count.result, weyl.result, orth.result, unit.result};
  return r;
}

void check_shape(AlgebraicModel const &model, ModelObject const &X)
{
  if (X.components.size() != model.factors.size())
    throw InvalidInputError("model object has " + std::to_string(X.components.size()) + " components, model has " +
                            std::to_string(model.factors.size()) + " classes");
  for (std::size_t c = 0; c < X.components.size(); ++c) {
    auto const &G = X.components[c].group();
    if (!(G == model.factors[c].weyl || *G == *model.factors[c].weyl))
      throw InvalidInputError("component " + std::to_string(c) + " is not over the Weyl group of its class");
  }
}

ModelObject unit_at(AlgebraicModel const &model, std::size_t cls)
{
  ModelObject X;
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &W = model.factors[c].weyl;
    X.components.push_back(c == cls ? sphere(W, 0) : ChainComplex::zero(W));
  }
  return X;
}

ModelObject model_unit(AlgebraicModel const &model)
{
  ModelObject X;
  for (auto const &f : model.factors)
    X.components.push_back(sphere(f.weyl, 0));
  return X;
}

namespace {

HomotopyClasses collect(AlgebraicModel const &model, ModelObject const &X, ModelObject const &Y,
                        GradedDims (*per)(ChainComplex const &, ChainComplex const &))
{
  check_shape(model, X);
  check_shape(model, Y);
  HomotopyClasses out;
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    GradedDims d = per(X.components[c], Y.components[c]);
    for (auto const &[n, v] : d)
      out.total[n] += v;
    out.per_class.push_back(std::move(d));
  }
  return out;
}

}  // namespace

HomotopyClasses homotopy_classes(AlgebraicModel const &model, ModelObject const &X, ModelObject const &Y)
{
  return collect(model, X, Y, &graded_fixed_hom_dims);
}

HomotopyClasses homotopy_classes_via_hom_complex(AlgebraicModel const &model, ModelObject const &X,
                                                 ModelObject const &Y)
{
  return collect(model, X, Y, &homotopy_hom);
}

EndomorphismReport endomorphism_check(AlgebraicModel const &model, std::size_t cls)
{
  if (cls >= model.factors.size())
    throw InvalidInputError("class index " + std::to_string(cls) + " out of range");
  auto const &f = model.factors[cls];
  auto const &S = *f.ea.structure;
  auto const &W = *f.weyl;
  EndomorphismReport r;
  r.cls = cls;
  r.weyl_order = W.order();
  r.dimension = f.ea.category->hom(1, 1).total_dim();

  std::vector<std::size_t> image(W.order());
  std::vector<bool> hit(r.dimension, false);
  r.basis_bijective = true;
  for (std::size_t w = 0; w < W.order(); ++w) {
    image[w] = S.right_translation(W.inverse(w));
    if (image[w] >= r.dimension || hit[image[w]])
      r.basis_bijective = false;
    else
      hit[image[w]] = true;
  }
  r.basis_bijective = r.basis_bijective && r.dimension == W.order();

  std::vector<Matrix> mats;
  for (std::size_t w = 0; w < W.order(); ++w)
    mats.push_back(S.as_matrix(1, 1, image[w]));
  r.table_matches = true;
  for (std::size_t a = 0; a < W.order() && r.table_matches; ++a)
    for (std::size_t b = 0; b < W.order(); ++b) {
      std::size_t ab = W.multiply(a, b);
      bool composed = f.ea.category->compose_basis(1, 1, 1, image[a], image[b]) == SparseVec::unit(image[ab]);
      bool as_maps = mats[a] * mats[b] == mats[ab];
      if (!composed || !as_maps) {
        r.table_matches = false;
        r.detail = "product of elements " + tuple_string({a, b}) + (composed ? " (as matrices)" : " (by composition)");
        break;
      }
    }
  return r;
}

}  // namespace eqmodel
