#include "eqmodel/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqmodel {

namespace {

// Accumulates a large sparse matrix from placed blocks.
class BlockBuilder
{
public:
  BlockBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(cols) {}

  void add(std::size_t row_off, std::size_t col_off, Matrix const &m, Rational const &scale = 1)
  {
    if (scale == 0 || m.is_zero())
      return;
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (auto const &[i, c] : m.column(j))
        entries_[col_off + j].emplace_back(row_off + i, scale * c);
  }

  Matrix build()
  {
    std::vector<SparseVec> cols;
    cols.reserve(cols_);
    for (auto &e : entries_)
      cols.push_back(SparseVec::from_unsorted(std::move(e)));
    return Matrix::from_columns(rows_, std::move(cols));
  }

private:
  std::size_t rows_, cols_;
  std::vector<std::vector<SparseVec::Entry>> entries_;
};

Rational sign(long k)
{
  return (k % 2 == 0) ? 1 : -1;
}

void require_same_group(ChainComplex const &x, ChainComplex const &y)
{
  if (x.group() != y.group() && !(*x.group() == *y.group()))
    throw Error("complexes over different groups");
}

GRepresentation block_sum(GroupPtr const &G, std::vector<GRepresentation> const &blocks)
{
  std::size_t dim = 0;
  for (auto const &b : blocks)
    dim += b.dim();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < G->generators().size(); ++k) {
    BlockBuilder bb(dim, dim);
    std::size_t off = 0;
    for (auto const &b : blocks) {
      bb.add(off, off, b.generator_action()[k]);
      off += b.dim();
    }
    gens.push_back(bb.build());
  }
  return GRepresentation(G, dim, std::move(gens), false);
}

}  // namespace

// ChainComplex ----------------------------------------------------------------

ChainComplex::ChainComplex() : ChainComplex(trivial_group(), 0, {}, {}, false) {}

ChainComplex::ChainComplex(GroupPtr G, int lo, std::vector<GRepresentation> terms,
                           std::vector<Matrix> differentials, bool validate)
{
  if (!G)
    throw Error("complex without a group");
  std::size_t expected = terms.empty() ? 0 : terms.size() - 1;
  if (differentials.size() != expected)
    throw Error("complex needs one differential between each pair of adjacent terms");
  for (auto const &t : terms)
    if (!(t.group() == G || *t.group() == *G))
      throw Error("complex term over a different group");
  for (std::size_t k = 0; k < differentials.size(); ++k)
    if (differentials[k].rows() != terms[k].dim() || differentials[k].cols() != terms[k + 1].dim())
      throw Error("differential has wrong shape");

  if (validate) {
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k)
      if (!(differentials[k] * differentials[k + 1]).is_zero())
        throw Error("differential does not square to zero");
    for (std::size_t k = 0; k < differentials.size(); ++k)
      if (!is_equivariant(differentials[k], terms[k + 1], terms[k]))
        throw Error("differential is not equivariant");
  }

  auto data = std::make_shared<Data>();
  data->group = std::move(G);
  data->lo = lo;
  data->terms = std::move(terms);
  data->differentials = std::move(differentials);
  data->offsets.reserve(data->terms.size());
  for (auto const &t : data->terms) {
    data->offsets.push_back(data->total);
    data->total += t.dim();
  }
  data_ = std::move(data);
}

ChainComplex ChainComplex::zero(GroupPtr G)
{
  return ChainComplex(std::move(G), 0, {}, {}, false);
}

ChainComplex ChainComplex::concentrated(GRepresentation const &term, int degree)
{
  return ChainComplex(term.group(), degree, {term}, {}, false);
}

ChainComplex ChainComplex::of_vector_spaces(int lo, std::vector<std::size_t> dims,
                                            std::vector<Matrix> differentials, bool validate)
{
  std::vector<GRepresentation> terms;
  for (auto d : dims)
    terms.push_back(GRepresentation::trivial(trivial_group(), d));
  return ChainComplex(trivial_group(), lo, std::move(terms), std::move(differentials), validate);
}

std::size_t ChainComplex::dim(int n) const
{
  if (n < lo() || n > hi())
    return 0;
  return data_->terms[static_cast<std::size_t>(n - lo())].dim();
}

GradedDims ChainComplex::dims() const
{
  GradedDims d;
  for (int n = lo(); n <= hi(); ++n)
    if (dim(n) > 0)
      d[n] = dim(n);
  return d;
}

std::size_t ChainComplex::offset(int n) const
{
  if (n < lo())
    return 0;
  if (n > hi())
    return data_->total;
  return data_->offsets[static_cast<std::size_t>(n - lo())];
}

int ChainComplex::degree_of(std::size_t global_index) const
{
  if (global_index >= data_->total)
    throw std::out_of_range("basis index outside complex");
  auto it = std::upper_bound(data_->offsets.begin(), data_->offsets.end(), global_index);
  int k = static_cast<int>(it - data_->offsets.begin()) - 1;
  // skip zero-dimensional terms sharing the same offset
  while (data_->terms[static_cast<std::size_t>(k)].dim() == 0)
    --k;
  return lo() + k;
}

GRepresentation ChainComplex::term(int n) const
{
  if (n < lo() || n > hi())
    return GRepresentation::trivial(group(), 0);
  return data_->terms[static_cast<std::size_t>(n - lo())];
}

Matrix ChainComplex::differential(int n) const
{
  if (n > lo() && n <= hi())
    return data_->differentials[static_cast<std::size_t>(n - lo() - 1)];
  return Matrix(dim(n - 1), dim(n));
}

bool ChainComplex::is_acyclic() const
{
  return homology_dims(*this).empty();
}

bool ChainComplex::has_zero_differential() const
{
  return std::all_of(data_->differentials.begin(), data_->differentials.end(),
                     [](Matrix const &d) { return d.is_zero(); });
}

// ChainMap --------------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components,
                   bool validate)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
  std::size_t expected = source_.empty() ? 0 : static_cast<std::size_t>(source_.hi() - source_.lo() + 1);
  if (components_.size() != expected)
    throw Error("chain map needs one component per source degree");
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    auto const &f = components_[static_cast<std::size_t>(n - source_.lo())];
    if (f.rows() != target_.dim(n) || f.cols() != source_.dim(n))
      throw Error("chain map component has wrong shape");
  }
  if (validate) {
    if (!is_chain_map())
      throw Error("map does not commute with the differentials");
    if (!is_equivariant())
      throw Error("chain map is not equivariant");
  }
}

ChainMap ChainMap::identity(ChainComplex const &x)
{
  std::vector<Matrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    comps.push_back(Matrix::identity(x.dim(n)));
  return ChainMap(x, x, std::move(comps), false);
}

ChainMap ChainMap::zero(ChainComplex const &source, ChainComplex const &target)
{
  std::vector<Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n)
    comps.push_back(Matrix(target.dim(n), source.dim(n)));
  return ChainMap(source, target, std::move(comps), false);
}

Matrix ChainMap::component(int n) const
{
  if (n < source_.lo() || n > source_.hi())
    return Matrix(target_.dim(n), source_.dim(n));
  return components_[static_cast<std::size_t>(n - source_.lo())];
}

SparseVec ChainMap::apply(SparseVec const &x) const
{
  std::vector<SparseVec::Entry> out;
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    SparseVec part = x.slice(source_.offset(n), source_.dim(n));
    if (part.empty())
      continue;
    for (auto &e : component(n).apply(part).shifted(target_.offset(n)))
      out.push_back(e);
  }
  return SparseVec::from_unsorted(std::move(out));
}

ChainMap operator*(ChainMap const &g, ChainMap const &f)
{
  auto const &mid_f = f.target();
  auto const &mid_g = g.source();
  std::vector<Matrix> comps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) {
    if (mid_f.dim(n) != mid_g.dim(n))
      throw Error("composing chain maps through different complexes");
    comps.push_back(g.component(n) * f.component(n));
  }
  return ChainMap(f.source(), g.target(), std::move(comps), false);
}

bool operator==(ChainMap const &a, ChainMap const &b)
{
  int lo = std::min(a.source().lo(), b.source().lo());
  int hi = std::max(a.source().hi(), b.source().hi());
  for (int n = lo; n <= hi; ++n) {
    Matrix fa = a.component(n), fb = b.component(n);
    if (fa.rows() != fb.rows() || fa.cols() != fb.cols() || !(fa == fb))
      return false;
  }
  return true;
}

bool ChainMap::is_chain_map() const
{
  for (int n = source_.lo(); n <= source_.hi() + 1; ++n)
    if (!(component(n - 1) * source_.differential(n) == target_.differential(n) * component(n)))
      return false;
  return true;
}

bool ChainMap::is_equivariant() const
{
  for (int n = source_.lo(); n <= source_.hi(); ++n)
    if (!eqmodel::is_equivariant(component(n), source_.term(n), target_.term(n)))
      return false;
  return true;
}

// Spheres and disks -----------------------------------------------------------

ChainComplex sphere(GroupPtr const &G, int n)
{
  return ChainComplex::concentrated(GRepresentation::regular(G), n);
}

ChainComplex disk(GroupPtr const &G, int n)
{
  auto qg = GRepresentation::regular(G);
  return ChainComplex(G, n - 1, {qg, qg}, {Matrix::identity(qg.dim())}, false);
}

ChainMap generating_cofibration(GroupPtr const &G, int n)
{
  auto s = sphere(G, n - 1);
  auto d = disk(G, n);
  return ChainMap(s, d, {Matrix::identity(G->order())});
}

ChainMap generating_acyclic_cofibration(GroupPtr const &G, int n)
{
  return ChainMap::zero(ChainComplex::zero(G), disk(G, n));
}

ChainComplex direct_sum(ChainComplex const &x, ChainComplex const &y)
{
  require_same_group(x, y);
  if (x.empty())
    return y;
  if (y.empty())
    return x;
  int lo = std::min(x.lo(), y.lo());
  int hi = std::max(x.hi(), y.hi());
  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(direct_sum(x.term(n), y.term(n)));
    if (n > lo)
      diffs.push_back(direct_sum(x.differential(n), y.differential(n)));
  }
  return ChainComplex(x.group(), lo, std::move(terms), std::move(diffs), false);
}

ChainComplex shift(ChainComplex const &x, int k)
{
  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    terms.push_back(x.term(n));
    if (n > x.lo())
      diffs.push_back(x.differential(n).scaled(sign(k)));
  }
  return ChainComplex(x.group(), x.lo() + k, std::move(terms), std::move(diffs), false);
}

// Tensor product --------------------------------------------------------------

namespace {

// Block layout of (X ⊗ Y)_n: one block per i with X_i ⊗ Y_{n-i}.
struct TensorLayout
{
  int lo = 0, hi = -1;
  // (n, i) -> offset within degree n
  std::map<std::pair<int, int>, std::size_t> offset;
  std::map<int, std::size_t> dim;

  TensorLayout(ChainComplex const &x, ChainComplex const &y)
  {
    if (x.empty() || y.empty())
      return;
    lo = x.lo() + y.lo();
    hi = x.hi() + y.hi();
    for (int n = lo; n <= hi; ++n) {
      std::size_t off = 0;
      for (int i = std::max(x.lo(), n - y.hi()); i <= std::min(x.hi(), n - y.lo()); ++i) {
        offset[{n, i}] = off;
        off += x.dim(i) * y.dim(n - i);
      }
      dim[n] = off;
    }
  }

  std::optional<std::size_t> at(int n, int i) const
  {
    auto it = offset.find({n, i});
    if (it == offset.end())
      return std::nullopt;
    return it->second;
  }
};

}  // namespace

ChainComplex tensor(ChainComplex const &x, ChainComplex const &y)
{
  require_same_group(x, y);
  if (x.empty() || y.empty())
    return ChainComplex::zero(x.group());
  TensorLayout L(x, y);

  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = L.lo; n <= L.hi; ++n) {
    std::vector<GRepresentation> blocks;
    for (int i = std::max(x.lo(), n - y.hi()); i <= std::min(x.hi(), n - y.lo()); ++i)
      blocks.push_back(tensor(x.term(i), y.term(n - i)));
    terms.push_back(block_sum(x.group(), blocks));

    if (n == L.lo)
      continue;
    BlockBuilder bb(L.dim[n - 1], L.dim[n]);
    for (int i = std::max(x.lo(), n - y.hi()); i <= std::min(x.hi(), n - y.lo()); ++i) {
      int j = n - i;
      std::size_t col = *L.at(n, i);
      if (auto row = L.at(n - 1, i - 1); row && i - 1 >= x.lo())
        bb.add(*row, col, kron(x.differential(i), Matrix::identity(y.dim(j))));
      if (auto row = L.at(n - 1, i); row && j - 1 >= y.lo())
        bb.add(*row, col, kron(Matrix::identity(x.dim(i)), y.differential(j)), sign(i));
    }
    diffs.push_back(bb.build());
  }
  return ChainComplex(x.group(), L.lo, std::move(terms), std::move(diffs), false);
}

ChainMap tensor(ChainMap const &f, ChainMap const &g)
{
  auto source = tensor(f.source(), g.source());
  auto target = tensor(f.target(), g.target());
  TensorLayout Ls(f.source(), g.source());
  TensorLayout Lt(f.target(), g.target());
  std::vector<Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) {
    BlockBuilder bb(target.dim(n), source.dim(n));
    for (int i = std::max(f.source().lo(), n - g.source().hi());
         i <= std::min(f.source().hi(), n - g.source().lo()); ++i) {
      auto row = Lt.at(n, i);
      if (!row)
        continue;
      bb.add(*row, *Ls.at(n, i), kron(f.component(i), g.component(n - i)));
    }
    comps.push_back(bb.build());
  }
  return ChainMap(source, target, std::move(comps), false);
}

ChainMap symmetry(ChainComplex const &x, ChainComplex const &y)
{
  auto source = tensor(x, y);
  auto target = tensor(y, x);
  TensorLayout Ls(x, y);
  TensorLayout Lt(y, x);
  std::vector<Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) {
    std::vector<SparseVec> cols(source.dim(n));
    for (int i = std::max(x.lo(), n - y.hi()); i <= std::min(x.hi(), n - y.lo()); ++i) {
      int j = n - i;
      std::size_t so = *Ls.at(n, i);
      std::size_t to = *Lt.at(n, j);
      Rational s = sign(static_cast<long>(i) * j);
      for (std::size_t a = 0; a < x.dim(i); ++a)
        for (std::size_t b = 0; b < y.dim(j); ++b)
          cols[so + a * y.dim(j) + b] = SparseVec::unit(to + b * x.dim(i) + a, s);
    }
    comps.push_back(Matrix::from_columns(target.dim(n), std::move(cols)));
  }
  return ChainMap(source, target, std::move(comps), false);
}

// Hom complex -----------------------------------------------------------------

namespace {

// Block layout of hom(X, Y)_n: one block per k with hom(X_k, Y_{n+k}).
struct HomLayout
{
  int lo = 0, hi = -1;
  std::map<std::pair<int, int>, std::size_t> offset;
  std::map<int, std::size_t> dim;

  HomLayout(ChainComplex const &x, ChainComplex const &y)
  {
    if (x.empty() || y.empty())
      return;
    lo = y.lo() - x.hi();
    hi = y.hi() - x.lo();
    for (int n = lo; n <= hi; ++n) {
      std::size_t off = 0;
      for (int k = std::max(x.lo(), y.lo() - n); k <= std::min(x.hi(), y.hi() - n); ++k) {
        offset[{n, k}] = off;
        off += x.dim(k) * y.dim(n + k);
      }
      dim[n] = off;
    }
  }

  std::optional<std::size_t> at(int n, int k) const
  {
    auto it = offset.find({n, k});
    if (it == offset.end())
      return std::nullopt;
    return it->second;
  }
};

}  // namespace

ChainComplex hom_complex(ChainComplex const &x, ChainComplex const &y)
{
  require_same_group(x, y);
  if (x.empty() || y.empty())
    return ChainComplex::zero(x.group());
  HomLayout L(x, y);

  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = L.lo; n <= L.hi; ++n) {
    std::vector<GRepresentation> blocks;
    for (int k = std::max(x.lo(), y.lo() - n); k <= std::min(x.hi(), y.hi() - n); ++k)
      blocks.push_back(hom(x.term(k), y.term(n + k)));
    terms.push_back(block_sum(x.group(), blocks));

    if (n == L.lo)
      continue;
    BlockBuilder bb(L.dim[n - 1], L.dim[n]);
    for (int k = std::max(x.lo(), y.lo() - n); k <= std::min(x.hi(), y.hi() - n); ++k) {
      std::size_t col = *L.at(n, k);
      // ∂_Y ∘ f
      if (auto row = L.at(n - 1, k))
        bb.add(*row, col, kron(Matrix::identity(x.dim(k)), y.differential(n + k)));
      // -(-1)^n f ∘ ∂_X
      if (auto row = L.at(n - 1, k + 1))
        bb.add(*row, col, kron(x.differential(k + 1).transpose(), Matrix::identity(y.dim(n + k))),
               -sign(n));
    }
    diffs.push_back(bb.build());
  }
  return ChainComplex(x.group(), L.lo, std::move(terms), std::move(diffs), false);
}

ChainMap hom_map(ChainMap const &f, ChainMap const &g)
{
  auto source = hom_complex(f.target(), g.source());
  auto target = hom_complex(f.source(), g.target());
  HomLayout Ls(f.target(), g.source());
  HomLayout Lt(f.source(), g.target());
  std::vector<Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) {
    BlockBuilder bb(target.dim(n), source.dim(n));
    for (int k = std::max(f.target().lo(), g.source().lo() - n);
         k <= std::min(f.target().hi(), g.source().hi() - n); ++k) {
      auto row = Lt.at(n, k);
      if (!row)
        continue;
      bb.add(*row, *Ls.at(n, k), kron(f.component(k).transpose(), g.component(n + k)));
    }
    comps.push_back(bb.build());
  }
  return ChainMap(source, target, std::move(comps), false);
}

// Fixed points ----------------------------------------------------------------

FixedPoints fixed_points_with_inclusion(ChainComplex const &x)
{
  FixedPoints fp;
  if (x.empty()) {
    fp.complex = ChainComplex::zero(trivial_group());
    return fp;
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    Matrix basis = fixed_subspace_basis(x.term(n));
    dims.push_back(basis.cols());
    if (n > x.lo()) {
      auto d = solve(fp.inclusion.at(n - 1), x.differential(n) * basis);
      if (!d)
        throw std::logic_error("differential does not preserve fixed points");
      diffs.push_back(std::move(*d));
    }
    fp.inclusion.emplace(n, std::move(basis));
  }
  fp.complex = ChainComplex::of_vector_spaces(x.lo(), std::move(dims), std::move(diffs), false);
  return fp;
}

ChainComplex fixed_points(ChainComplex const &x)
{
  return fixed_points_with_inclusion(x).complex;
}

ChainComplex trivial_action(ChainComplex const &m, GroupPtr const &G)
{
  if (m.group()->order() != 1)
    throw Error("trivial_action expects a complex over the trivial group");
  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = m.lo(); n <= m.hi(); ++n) {
    terms.push_back(GRepresentation::trivial(G, m.dim(n)));
    if (n > m.lo())
      diffs.push_back(m.differential(n));
  }
  return ChainComplex(G, m.lo(), std::move(terms), std::move(diffs), false);
}

ChainComplex tensor_ch_over_base(ChainComplex const &m, ChainComplex const &x)
{
  return tensor(trivial_action(m, x.group()), x);
}

// Homology --------------------------------------------------------------------

SparseVec HomologyDegree::project(SparseVec const &cycle) const
{
  auto coords = solve(cycles, cycle);
  if (!coords)
    throw Error("vector is not a cycle");
  return quotient.apply(*coords);
}

Homology::Homology(ChainComplex const &x) : complex_(x)
{
  empty_.rep = GRepresentation::trivial(x.group(), 0);
  for (int n = x.lo(); n <= x.hi(); ++n) {
    HomologyDegree h;
    h.cycles = kernel(x.differential(n));
    auto boundary_coords = solve(h.cycles, x.differential(n + 1));
    if (!boundary_coords)
      throw std::logic_error("boundaries are not cycles");
    Cokernel q = cokernel(*boundary_coords);
    h.quotient = q.quotient;
    h.representatives = h.cycles * q.section;

    std::vector<Matrix> gens;
    GRepresentation const term = x.term(n);
    for (auto const &g : term.generator_action()) {
      auto moved = solve(h.cycles, g * h.representatives);
      if (!moved)
        throw std::logic_error("cycles are not invariant");
      gens.push_back(h.quotient * *moved);
    }
    h.rep = GRepresentation(x.group(), q.dim(), std::move(gens), false);
    degrees_.emplace(n, std::move(h));
  }
}

HomologyDegree const &Homology::at(int n) const
{
  auto it = degrees_.find(n);
  return it == degrees_.end() ? empty_ : it->second;
}

GradedDims Homology::dims() const
{
  GradedDims d;
  for (auto const &[n, h] : degrees_)
    if (h.rep.dim() > 0)
      d[n] = h.rep.dim();
  return d;
}

ChainComplex Homology::as_complex() const
{
  if (complex_.empty())
    return ChainComplex::zero(complex_.group());
  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = complex_.lo(); n <= complex_.hi(); ++n) {
    terms.push_back(at(n).rep);
    if (n > complex_.lo())
      diffs.push_back(Matrix(at(n - 1).rep.dim(), at(n).rep.dim()));
  }
  return ChainComplex(complex_.group(), complex_.lo(), std::move(terms), std::move(diffs), false);
}

GradedDims homology_dims(ChainComplex const &x)
{
  GradedDims d;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    if (x.dim(n) == 0)
      continue;
    std::size_t h = x.dim(n) - rank(x.differential(n)) - rank(x.differential(n + 1));
    if (h > 0)
      d[n] = h;
  }
  return d;
}

Matrix induced_on_homology(ChainMap const &f, Homology const &hs, Homology const &ht, int n)
{
  auto const &s = hs.at(n);
  auto const &t = ht.at(n);
  if (s.rep.dim() == 0 || t.rep.dim() == 0)
    return Matrix(t.rep.dim(), s.rep.dim());
  auto coords = solve(t.cycles, f.component(n) * s.representatives);
  if (!coords)
    throw std::logic_error("chain map does not send cycles to cycles");
  return t.quotient * *coords;
}

bool is_homology_isomorphism(ChainMap const &f)
{
  Homology hs(f.source());
  Homology ht(f.target());
  auto ds = hs.dims();
  auto dt = ht.dims();
  if (ds != dt)
    return false;
  for (auto const &[n, d] : ds)
    if (rank(induced_on_homology(f, hs, ht, n)) != d)
      return false;
  return true;
}

// Pushouts and cokernels ------------------------------------------------------

namespace {

struct PushoutData
{
  Pushout result;
  std::map<int, Matrix> section;
};

PushoutData pushout_with_sections(ChainMap const &f, ChainMap const &g)
{
  ChainComplex const &A = f.source();
  ChainComplex const &B = f.target();
  ChainComplex const &C = g.target();
  if (A.dims() != g.source().dims())
    throw Error("pushout legs have different sources");
  require_same_group(B, C);

  PushoutData out;
  if (B.empty() && C.empty()) {
    auto z = ChainComplex::zero(B.group());
    out.result = Pushout{z, ChainMap::zero(B, z), ChainMap::zero(C, z)};
    return out;
  }
  int lo = B.empty() ? C.lo() : (C.empty() ? B.lo() : std::min(B.lo(), C.lo()));
  int hi = B.empty() ? C.hi() : (C.empty() ? B.hi() : std::max(B.hi(), C.hi()));

  std::map<int, Cokernel> cok;
  for (int n = lo - 1; n <= hi; ++n)
    cok.emplace(n, cokernel(vstack(f.component(n), g.component(n).scaled(-1))));

  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    auto const &q = cok.at(n);
    terms.push_back(quotient_of(direct_sum(B.term(n), C.term(n)), q));
    if (n > lo)
      diffs.push_back(cok.at(n - 1).quotient *
                      direct_sum(B.differential(n), C.differential(n)) * q.section);
  }
  ChainComplex P(B.group(), lo, std::move(terms), std::move(diffs), false);

  std::vector<Matrix> lb, lc;
  for (int n = B.lo(); n <= B.hi(); ++n)
    lb.push_back(cok.at(n).quotient.block(0, cok.at(n).dim(), 0, B.dim(n)));
  for (int n = C.lo(); n <= C.hi(); ++n)
    lc.push_back(cok.at(n).quotient.block(0, cok.at(n).dim(), B.dim(n), C.dim(n)));

  out.result = Pushout{P, ChainMap(B, P, std::move(lb), false), ChainMap(C, P, std::move(lc), false)};
  for (int n = lo; n <= hi; ++n)
    out.section.emplace(n, cok.at(n).section);
  return out;
}

}  // namespace

Pushout pushout(ChainMap const &f, ChainMap const &g)
{
  return pushout_with_sections(f, g).result;
}

ChainMap pushout_product(ChainMap const &f, ChainMap const &g)
{
  ChainComplex const &A = f.source();
  ChainComplex const &C = g.source();
  ChainComplex const &D = g.target();
  ChainComplex const &B = f.target();

  auto f_c = tensor(f, ChainMap::identity(C));  // A⊗C -> B⊗C
  auto a_g = tensor(ChainMap::identity(A), g);  // A⊗C -> A⊗D
  auto po = pushout_with_sections(f_c, a_g);
  auto b_g = tensor(ChainMap::identity(B), g);  // B⊗C -> B⊗D
  auto f_d = tensor(f, ChainMap::identity(D));  // A⊗D -> B⊗D

  ChainComplex const &P = po.result.complex;
  ChainComplex BD = b_g.target();
  std::vector<Matrix> comps;
  for (int n = P.lo(); n <= P.hi(); ++n) {
    Matrix joint = hstack(b_g.component(n), f_d.component(n));
    comps.push_back(joint * po.section.at(n));
  }
  return ChainMap(P, BD, std::move(comps), false);
}

QuotientComplex cokernel(ChainMap const &f)
{
  ChainComplex const &Y = f.target();
  if (Y.empty())
    return {Y, ChainMap::identity(Y)};
  std::map<int, Cokernel> cok;
  for (int n = Y.lo(); n <= Y.hi(); ++n)
    cok.emplace(n, cokernel(f.component(n)));

  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  std::vector<Matrix> proj;
  for (int n = Y.lo(); n <= Y.hi(); ++n) {
    terms.push_back(quotient_of(Y.term(n), cok.at(n)));
    if (n > Y.lo())
      diffs.push_back(cok.at(n - 1).quotient * Y.differential(n) * cok.at(n).section);
    proj.push_back(cok.at(n).quotient);
  }
  ChainComplex Q(Y.group(), Y.lo(), std::move(terms), std::move(diffs), false);
  return {Q, ChainMap(Y, Q, std::move(proj), false)};
}

// Truncations -----------------------------------------------------------------

Truncation connective_cover(ChainComplex const &x)
{
  if (x.empty() || x.hi() < 0) {
    auto z = ChainComplex::zero(x.group());
    return {z, ChainMap::zero(z, x)};
  }
  if (x.lo() > 0)
    return {x, ChainMap::identity(x)};

  Matrix z0 = kernel(x.differential(0));
  std::vector<GRepresentation> terms{restrict_to(x.term(0), z0)};
  std::vector<Matrix> diffs;
  std::vector<Matrix> incl{z0};
  for (int n = 1; n <= x.hi(); ++n) {
    terms.push_back(x.term(n));
    if (n == 1) {
      auto d1 = solve(z0, x.differential(1));
      if (!d1)
        throw std::logic_error("boundaries are not cycles");
      diffs.push_back(std::move(*d1));
    } else {
      diffs.push_back(x.differential(n));
    }
    incl.push_back(Matrix::identity(x.dim(n)));
  }
  ChainComplex c(x.group(), 0, std::move(terms), std::move(diffs), false);
  return {c, ChainMap(c, x, std::move(incl), false)};
}

Truncation h0_truncation(ChainComplex const &x)
{
  Truncation cover = connective_cover(x);
  ChainComplex const &c = cover.complex;
  if (c.empty() || c.lo() > 0) {
    auto z = ChainComplex::zero(x.group());
    return {z, ChainMap::zero(c, z)};
  }
  Homology h(x);
  auto const &h0 = h.at(0);
  ChainComplex target = ChainComplex::concentrated(h0.rep, 0);
  std::vector<Matrix> comps{h0.quotient};
  for (int n = 1; n <= c.hi(); ++n)
    comps.push_back(Matrix(0, c.dim(n)));
  return {target, ChainMap(c, target, std::move(comps), false)};
}

GradedDims homotopy_hom(ChainComplex const &x, ChainComplex const &y)
{
  return homology_dims(fixed_points(hom_complex(x, y)));
}

GradedDims graded_fixed_hom_dims(ChainComplex const &x, ChainComplex const &y)
{
  Homology hx(x), hy(y);
  GradedDims out;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    if (hx.at(k).rep.dim() == 0)
      continue;
    for (int m = y.lo(); m <= y.hi(); ++m) {
      if (hy.at(m).rep.dim() == 0)
        continue;
      std::size_t d = equivariant_hom_dimension(hx.at(k).rep, hy.at(m).rep);
      if (d > 0)
        out[m - k] += d;
    }
  }
  return out;
}

}  // namespace eqmodel

namespace eqmodel {

TensorBasis::TensorBasis(ChainComplex x, ChainComplex y)
    : x_(std::move(x)), y_(std::move(y)), product_(tensor(x_, y_))
{
  if (x_.empty() || y_.empty())
    return;
  for (int n = x_.lo() + y_.lo(); n <= x_.hi() + y_.hi(); ++n) {
    std::size_t off = 0;
    for (int i = std::max(x_.lo(), n - y_.hi()); i <= std::min(x_.hi(), n - y_.lo()); ++i) {
      block_offset_[{n, i}] = off;
      off += x_.dim(i) * y_.dim(n - i);
    }
  }
}

std::size_t TensorBasis::index(std::size_t ix, std::size_t iy) const
{
  int i = x_.degree_of(ix);
  int j = y_.degree_of(iy);
  return product_.offset(i + j) + block_offset_.at({i + j, i}) +
         (ix - x_.offset(i)) * y_.dim(j) + (iy - y_.offset(j));
}

std::pair<std::size_t, std::size_t> TensorBasis::split(std::size_t index) const
{
  int n = product_.degree_of(index);
  std::size_t local = index - product_.offset(n);
  for (int i = std::min(x_.hi(), n - y_.lo()); i >= std::max(x_.lo(), n - y_.hi()); --i) {
    std::size_t off = block_offset_.at({n, i});
    std::size_t size = x_.dim(i) * y_.dim(n - i);
    if (size == 0 || local < off)
      continue;
    std::size_t r = local - off;
    return {x_.offset(i) + r / y_.dim(n - i), y_.offset(n - i) + r % y_.dim(n - i)};
  }
  throw std::logic_error("tensor index outside every block");
}

SparseVec TensorBasis::combine(SparseVec const &x, SparseVec const &y) const
{
  std::vector<SparseVec::Entry> out;
  for (auto const &[i, a] : x)
    for (auto const &[j, b] : y)
      out.emplace_back(index(i, j), a * b);
  return SparseVec::from_unsorted(std::move(out));
}

}  // namespace eqmodel

namespace eqmodel {

HomBasis::HomBasis(ChainComplex x, ChainComplex y)
    : x_(std::move(x)), y_(std::move(y)), hom_(hom_complex(x_, y_))
{
  if (x_.empty() || y_.empty())
    return;
  for (int n = y_.lo() - x_.hi(); n <= y_.hi() - x_.lo(); ++n) {
    std::size_t off = 0;
    for (int k = std::max(x_.lo(), y_.lo() - n); k <= std::min(x_.hi(), y_.hi() - n); ++k) {
      block_offset_[{n, k}] = off;
      off += x_.dim(k) * y_.dim(n + k);
    }
  }
}

HomBasis::Unit HomBasis::decode(std::size_t index) const
{
  int n = hom_.degree_of(index);
  std::size_t local = index - hom_.offset(n);
  for (int k = std::min(x_.hi(), y_.hi() - n); k >= std::max(x_.lo(), y_.lo() - n); --k) {
    std::size_t off = block_offset_.at({n, k});
    std::size_t rows = y_.dim(n + k);
    std::size_t size = x_.dim(k) * rows;
    if (size == 0 || local < off)
      continue;
    std::size_t r = local - off;
    return Unit{n, k, r % rows, r / rows};
  }
  throw std::logic_error("hom index outside every block");
}

std::size_t HomBasis::encode(Unit const &u) const
{
  return hom_.offset(u.degree) + block_offset_.at({u.degree, u.source_degree}) +
         u.col * y_.dim(u.degree + u.source_degree) + u.row;
}

SparseVec HomBasis::apply(SparseVec const &f, SparseVec const &x) const
{
  std::vector<SparseVec::Entry> out;
  for (auto const &[i, a] : f) {
    Unit u = decode(i);
    std::size_t src = x_.offset(u.source_degree) + u.col;
    Rational c = x.get(src);
    if (c != 0)
      out.emplace_back(y_.offset(u.degree + u.source_degree) + u.row, a * c);
  }
  return SparseVec::from_unsorted(std::move(out));
}

SparseVec compose_units(HomBasis const &yz, HomBasis const &xy, HomBasis const &xz,
                        std::size_t g, std::size_t f)
{
  auto ug = yz.decode(g);
  auto uf = xy.decode(f);
  if (uf.degree + uf.source_degree != ug.source_degree || uf.row != ug.col)
    return {};
  return SparseVec::unit(
      xz.encode(HomBasis::Unit{ug.degree + uf.degree, uf.source_degree, ug.row, uf.col}));
}

}  // namespace eqmodel

namespace eqmodel {

SparseVec boundary(ChainComplex const &x, SparseVec const &v)
{
  std::vector<SparseVec::Entry> out;
  for (int n = x.lo() + 1; n <= x.hi(); ++n) {
    SparseVec part = degree_part(x, v, n);
    if (part.empty())
      continue;
    for (auto &e : x.differential(n).apply(part).shifted(x.offset(n - 1)))
      out.push_back(std::move(e));
  }
  return SparseVec::from_unsorted(std::move(out));
}

SparseVec degree_part(ChainComplex const &x, SparseVec const &v, int n)
{
  return v.slice(x.offset(n), x.dim(n));
}

SparseVec from_degree(ChainComplex const &x, SparseVec const &local, int n)
{
  return local.shifted(x.offset(n));
}

}  // namespace eqmodel
