#include "eqmodel/random_objects.hpp"

namespace eqmodel {

namespace {

int uniform(Rng &rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Permutation modules of index ≤ 6, cached per group.
std::vector<GRepresentation> small_permutation_modules(GroupPtr const &W)
{
  std::vector<GRepresentation> out;
  ConjugacyClassTable table(W);
  for (auto const &K : table.representatives())
    if (W->order() / K.members.size() <= 6)
      out.push_back(GRepresentation::on_cosets(W, K));
  return out;
}

// Av_W of a random integer matrix: an equivariant endomorphism.
Matrix random_equivariant(GRepresentation const &rep, Rng &rng)
{
  std::size_t n = rep.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto &r : rows)
    for (auto &x : r)
      x = uniform(rng, -2, 2);
  Matrix m = Matrix::from_dense(rows);
  Matrix sum(n, n);
  auto const &W = *rep.group();
  for (std::size_t g = 0; g < W.order(); ++g)
    sum = sum + rep.action(g) * m * rep.action(W.inverse(g));
  return sum.scaled(Rational(1, static_cast<unsigned long>(W.order())));
}

Matrix random_equivariant_automorphism(GRepresentation const &rep, Rng &rng)
{
  if (rep.dim() == 0)
    return Matrix(0, 0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix a = random_equivariant(rep, rng);
    if (rank(a) == rep.dim())
      return a;
  }
  return Matrix::identity(rep.dim());
}

}  // namespace

ChainComplex random_complex(GroupPtr const &W, Rng &rng, RandomComplexOptions const &opt)
{
  auto mods = small_permutation_modules(W);
  int window = uniform(rng, 1, opt.max_window);
  int lo = uniform(rng, opt.min_degree, opt.max_degree);
  int hi = lo + window - 1;

  // Each piece is a module placed in degree n, possibly with a copy in n-1
  // joined by the identity (a disk).
  struct Piece
  {
    std::size_t mod;
    int degree;
    bool disk;
  };
  std::vector<Piece> pieces;
  std::map<int, std::size_t> used;
  int attempts = 3 * window;
  for (int k = 0; k < attempts; ++k) {
    std::size_t m = std::size_t(uniform(rng, 0, int(mods.size()) - 1));
    int n = uniform(rng, lo, hi);
    bool disk = n > lo && uniform(rng, 0, 1) == 1;
    std::size_t d = mods[m].dim();
    if (used[n] + d > opt.max_dim || (disk && used[n - 1] + d > opt.max_dim))
      continue;
    used[n] += d;
    if (disk)
      used[n - 1] += d;
    pieces.push_back({m, n, disk});
  }

  // Lay out degree by degree: each degree is a direct sum of piece slots.
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> slots;  // degree -> (piece, module)
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    slots[pieces[p].degree].push_back({p, pieces[p].mod});
    if (pieces[p].disk)
      slots[pieces[p].degree - 1].push_back({p, pieces[p].mod});
  }
  std::vector<GRepresentation> terms;
  std::map<int, std::map<std::size_t, std::size_t>> offset;  // degree -> piece -> offset
  for (int n = lo; n <= hi; ++n) {
    GRepresentation t = GRepresentation::trivial(W, 0);
    std::size_t off = 0;
    for (auto [p, m] : slots[n]) {
      offset[n][p] = off;
      off += mods[m].dim();
      t = direct_sum(t, mods[m]);
    }
    terms.push_back(t);
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    std::size_t rows = terms[std::size_t(n - 1 - lo)].dim(), cols = terms[std::size_t(n - lo)].dim();
    std::vector<SparseVec> c(cols);
    for (std::size_t p = 0; p < pieces.size(); ++p)
      if (pieces[p].disk && pieces[p].degree == n)
        for (std::size_t i = 0; i < mods[pieces[p].mod].dim(); ++i)
          c[offset[n][p] + i] = SparseVec::unit(offset[n - 1][p] + i);
    diffs.push_back(Matrix::from_columns(rows, std::move(c)));
  }

  // d'_n = A_{n-1} d_n A_n^{-1}
  std::vector<Matrix> autos, inverses;
  for (auto const &t : terms) {
    autos.push_back(random_equivariant_automorphism(t, rng));
    inverses.push_back(t.dim() ? inverse(autos.back()) : Matrix(0, 0));
  }
  for (std::size_t k = 0; k < diffs.size(); ++k)
    diffs[k] = autos[k] * diffs[k] * inverses[k + 1];
  return ChainComplex(W, lo, std::move(terms), std::move(diffs));
}

ChainComplex random_small_complex(Rng &rng)
{
  int shape = uniform(rng, 0, 3);
  int n = uniform(rng, -1, 1);
  switch (shape) {
  case 0:
    return ChainComplex::of_vector_spaces(n, {1}, {});
  case 1:
    return ChainComplex::of_vector_spaces(n, {2}, {});
  case 2: {
    int gap = uniform(rng, 1, 2);
    std::vector<std::size_t> dims(std::size_t(gap) + 1, 0);
    dims.front() = dims.back() = 1;
    std::vector<Matrix> d(static_cast<std::size_t>(gap));
    for (std::size_t k = 0; k < d.size(); ++k)
      d[k] = Matrix(dims[k], dims[k + 1]);
    return ChainComplex::of_vector_spaces(n - 1, dims, d);
  }
  default: {
    int c = uniform(rng, 1, 3);
    return ChainComplex::of_vector_spaces(n - 1, {1, 1}, {Matrix::from_dense({{Rational(c)}})});
  }
  }
}

RandomCategory random_category(Rng &rng)
{
  RandomCategory C;
  int k = uniform(rng, 1, 3);
  for (int i = 0; i < k; ++i)
    C.objects.push_back(random_small_complex(rng));
  C.category = chain_complex_category(C.objects);
  return C;
}

DGModule hom_module(RandomCategory const &C, ChainComplex const &Y)
{
  auto to_y = std::make_shared<std::vector<HomBasis>>();
  auto between = std::make_shared<std::vector<HomBasis>>();
  std::size_t n = C.objects.size();
  std::vector<ChainComplex> values;
  for (std::size_t a = 0; a < n; ++a) {
    to_y->emplace_back(C.objects[a], Y);
    values.push_back(to_y->back().complex());
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      between->emplace_back(C.objects[a], C.objects[b]);
  auto act = [to_y, between, n](int a, int b, std::size_t u, std::size_t phi) {
    return compose_units((*to_y)[std::size_t(b)], (*between)[std::size_t(a) * n + std::size_t(b)],
                         (*to_y)[std::size_t(a)], u, phi);
  };
  return DGModule(C.category, std::move(values), act);
}

DGModule random_module(RandomCategory const &C, Rng &rng)
{
  auto one = [&]() {
    if (uniform(rng, 0, 1) == 0)
      return hom_module(C, random_small_complex(rng));
    return free_module(C.category, uniform(rng, 0, C.category->size() - 1));
  };
  if (uniform(rng, 0, 3) == 0) {
    DGModule a = one();
    return direct_sum(a, one());
  }
  return one();
}

DGModule random_ea_module(CategoryPtr const &E, Rng &rng, RandomComplexOptions const &opt)
{
  switch (uniform(rng, 0, 2)) {
  case 0:
    return underhom_generators(random_complex(E->ea->weyl(), rng, opt), E);
  case 1:
    return free_module(E, 0);
  default:
    return free_module(E, 1);
  }
}

ModelObject random_model_object(AlgebraicModel const &model, Rng &rng, RandomComplexOptions const &opt)
{
  ModelObject X;
  for (auto const &f : model.factors)
    X.components.push_back(random_complex(f.weyl, rng, opt));
  return X;
}

}  // namespace eqmodel
