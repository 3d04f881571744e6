#include "eqmodel/dg_modules.hpp"

#include <mutex>

#include "check_util.hpp"
#include "eqmodel/coinvariants.hpp"

namespace eqmodel {

using detail::Checker;
using detail::koszul;

namespace {

EaStructure const &ea_of(CategoryPtr const &E)
{
  if (!E || !E->ea)
    throw InvalidInputError("operation needs a module over an E_a category");
  return *E->ea;
}

std::string objects_string(std::initializer_list<int> objs)
{
  std::vector<std::size_t> t;
  for (int o : objs)
    t.push_back(static_cast<std::size_t>(o));
  return tuple_string(t);
}

// Per-degree matrices of a linear map given on global basis vectors.
std::vector<Matrix> components_from(ChainComplex const &source, ChainComplex const &target,
                                    std::function<SparseVec(std::size_t)> const &image)
{
  std::vector<Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) {
    std::vector<SparseVec> cols;
    for (std::size_t j = 0; j < source.dim(n); ++j)
      cols.push_back(degree_part(target, image(source.offset(n) + j), n));
    comps.push_back(Matrix::from_columns(target.dim(n), std::move(cols)));
  }
  return comps;
}

ChainMap linear_chain_map(ChainComplex const &source, ChainComplex const &target,
                          std::function<SparseVec(std::size_t)> const &image)
{
  return ChainMap(source, target, components_from(source, target, image));
}

bool is_isomorphism(ChainMap const &f)
{
  auto const &s = f.source();
  auto const &t = f.target();
  int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
  for (int n = lo; n <= hi; ++n) {
    if (s.dim(n) != t.dim(n))
      return false;
    if (s.dim(n) > 0 && rank(f.component(n)) != s.dim(n))
      return false;
  }
  return true;
}

}  // namespace

// DGModule --------------------------------------------------------------------

DGModule::DGModule(CategoryPtr base, std::vector<ChainComplex> values, ActBasis act)
    : base_(std::move(base)), values_(std::move(values)), act_(std::move(act))
{
  if (!base_)
    throw InvalidInputError("module without a base category");
  if (values_.size() != static_cast<std::size_t>(base_->size()))
    throw InvalidInputError("module needs one value per object");
  for (auto const &v : values_)
    if (v.group()->order() != 1)
      throw InvalidInputError("module values are complexes of vector spaces");
}

SparseVec DGModule::act_basis(int a, int b, std::size_t x, std::size_t phi) const
{
  return act_(a, b, x, phi);
}

SparseVec DGModule::act(int a, int b, SparseVec const &x, SparseVec const &phi) const
{
  std::vector<SparseVec::Entry> out;
  for (auto const &[xi, xc] : x)
    for (auto const &[pi, pc] : phi) {
      Rational c = xc * pc;
      for (auto const &[i, v] : act_(a, b, xi, pi))
        out.emplace_back(i, c * v);
    }
  return SparseVec::from_unsorted(std::move(out));
}

Report check_module(DGModule const &M, std::uint64_t seed)
{
  auto const &E = *M.base();
  std::size_t n = static_cast<std::size_t>(E.size());
  Checker unit("module unit law");
  Checker leibniz("module action is a chain map");
  Checker assoc("module associativity");

  for (int a = 0; a < E.size(); ++a)
    for (auto const &t : sample_tuples({M.value(a).total_dim()}, kExhaustiveBudget,
                                       mix_seed(seed, {11, std::size_t(a)}))) {
      SparseVec x = SparseVec::unit(t[0]);
      unit.record(M.act(a, a, x, E.identity(a)) == x,
                  [&] { return "object " + std::to_string(a) + " basis " + std::to_string(t[0]); });
    }

  for (auto const &o : sample_tuples({n, n}, 256, mix_seed(seed, {12}))) {
    int a = int(o[0]), b = int(o[1]);
    auto const &Mb = M.value(b);
    auto const &Eab = E.hom(a, b);
    for (auto const &t : sample_tuples({Mb.total_dim(), Eab.total_dim()}, 128,
                                       mix_seed(seed, {13, o[0], o[1]}))) {
      SparseVec x = SparseVec::unit(t[0]), phi = SparseVec::unit(t[1]);
      int dx = Mb.degree_of(t[0]);
      SparseVec lhs = boundary(M.value(a), M.act(a, b, x, phi));
      SparseVec rhs = M.act(a, b, boundary(Mb, x), phi) +
                      M.act(a, b, x, boundary(Eab, phi)).scaled(koszul(dx, 1));
      leibniz.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  for (auto const &o : sample_tuples({n, n, n}, 256, mix_seed(seed, {14}))) {
    int a = int(o[0]), b = int(o[1]), c = int(o[2]);
    for (auto const &t : sample_tuples({M.value(c).total_dim(), E.hom(b, c).total_dim(),
                                        E.hom(a, b).total_dim()},
                                       64, mix_seed(seed, {15, o[0], o[1], o[2]}))) {
      SparseVec x = SparseVec::unit(t[0]), g = SparseVec::unit(t[1]), f = SparseVec::unit(t[2]);
      SparseVec lhs = M.act(a, b, M.act(b, c, x, g), f);
      SparseVec rhs = M.act(a, c, x, E.compose(a, b, c, g, f));
      assoc.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  Report r;
  r.checks = {unit.result, leibniz.result, assoc.result};
  return r;
}

DGModule free_module(CategoryPtr const &E, int a)
{
  if (a < 0 || a >= E->size())
    throw InvalidInputError("free module on an unknown object " + std::to_string(a));
  std::vector<ChainComplex> values;
  for (int x = 0; x < E->size(); ++x)
    values.push_back(E->hom(x, a));
  auto act = [E, a](int x, int b, std::size_t u, std::size_t phi) {
    return E->compose_basis(x, b, a, u, phi);
  };
  return DGModule(E, std::move(values), act);
}

DGModule zero_module(CategoryPtr const &E)
{
  std::vector<ChainComplex> values(static_cast<std::size_t>(E->size()), ChainComplex::zero(trivial_group()));
  return DGModule(E, std::move(values), [](int, int, std::size_t, std::size_t) { return SparseVec{}; });
}

SparseVec include_left(DGModule const &M, DGModule const &N, int a, SparseVec const &x)
{
  auto const &X = M.value(a);
  ChainComplex S = direct_sum(X, N.value(a));
  SparseVec out;
  for (int n = X.lo(); n <= X.hi(); ++n)
    out = out + degree_part(X, x, n).shifted(S.offset(n));
  return out;
}

SparseVec include_right(DGModule const &M, DGModule const &N, int a, SparseVec const &y)
{
  auto const &Y = N.value(a);
  ChainComplex S = direct_sum(M.value(a), Y);
  SparseVec out;
  for (int n = Y.lo(); n <= Y.hi(); ++n)
    out = out + degree_part(Y, y, n).shifted(S.offset(n) + M.value(a).dim(n));
  return out;
}

DGModule direct_sum(DGModule const &M, DGModule const &N)
{
  if (M.base() != N.base())
    throw InvalidInputError("direct sum of modules over different categories");
  std::vector<ChainComplex> values;
  for (int a = 0; a < M.size(); ++a)
    values.push_back(direct_sum(M.value(a), N.value(a)));
  auto sums = std::make_shared<std::vector<ChainComplex>>(values);
  auto Mp = std::make_shared<DGModule const>(M);
  auto Np = std::make_shared<DGModule const>(N);
  auto act = [sums, Mp, Np](int a, int b, std::size_t i, std::size_t phi) {
    auto const &S = (*sums)[std::size_t(b)];
    int n = S.degree_of(i);
    std::size_t local = i - S.offset(n);
    std::size_t left_dim = Mp->value(b).dim(n);
    if (local < left_dim) {
      std::size_t x = Mp->value(b).offset(n) + local;
      return include_left(*Mp, *Np, a, Mp->act_basis(a, b, x, phi));
    }
    std::size_t y = Np->value(b).offset(n) + (local - left_dim);
    return include_right(*Mp, *Np, a, Np->act_basis(a, b, y, phi));
  };
  return DGModule(M.base(), std::move(values), act);
}

// Module maps -----------------------------------------------------------------

Report check_module_map(ModuleMap const &f, std::uint64_t seed)
{
  auto const &M = *f.source;
  auto const &N = *f.target;
  auto const &E = *M.base();
  Checker shape("module map components");
  Checker natural("module map commutes with the action");
  for (int a = 0; a < E.size(); ++a) {
    auto const &c = f.at(a);
    bool ok = c.source().dims() == M.value(a).dims() && c.target().dims() == N.value(a).dims() &&
              c.is_chain_map();
    shape.record(ok, [&] { return "object " + std::to_string(a); });
  }
  std::size_t n = static_cast<std::size_t>(E.size());
  for (auto const &o : sample_tuples({n, n}, 256, mix_seed(seed, {21}))) {
    int a = int(o[0]), b = int(o[1]);
    for (auto const &t : sample_tuples({M.value(b).total_dim(), E.hom(a, b).total_dim()}, 128,
                                       mix_seed(seed, {22, o[0], o[1]}))) {
      SparseVec x = SparseVec::unit(t[0]), phi = SparseVec::unit(t[1]);
      SparseVec lhs = f.at(a).apply(M.act(a, b, x, phi));
      SparseVec rhs = N.act(a, b, f.at(b).apply(x), phi);
      natural.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }
  Report r;
  r.checks = {shape.result, natural.result};
  return r;
}

bool is_weak_equivalence(ModuleMap const &f)
{
  for (auto const &c : f.components)
    if (!is_homology_isomorphism(c))
      return false;
  return true;
}

ModuleMap identity_map(std::shared_ptr<DGModule const> const &M)
{
  ModuleMap f{M, M, {}};
  for (int a = 0; a < M->size(); ++a)
    f.components.push_back(ChainMap::identity(M->value(a)));
  return f;
}

std::size_t module_map_dimension(DGModule const &M, DGModule const &N)
{
  auto const &E = *M.base();
  // unknown (a, n, row, col) of f(a)_n
  std::map<std::pair<int, int>, std::size_t> offset;
  std::size_t unknowns = 0;
  for (int a = 0; a < E.size(); ++a) {
    auto const &X = M.value(a);
    for (int n = X.lo(); n <= X.hi(); ++n) {
      offset[{a, n}] = unknowns;
      unknowns += X.dim(n) * N.value(a).dim(n);
    }
  }
  auto var = [&](int a, int n, std::size_t row, std::size_t col) {
    return offset.at({a, n}) + col * N.value(a).dim(n) + row;
  };

  std::vector<SparseVec> rows;
  auto flush = [&](std::map<std::size_t, std::vector<SparseVec::Entry>> &acc) {
    for (auto &[k, entries] : acc) {
      SparseVec r = SparseVec::from_unsorted(std::move(entries));
      if (!r.empty())
        rows.push_back(std::move(r));
    }
    acc.clear();
  };

  // d f_n - f_{n-1} d = 0
  for (int a = 0; a < E.size(); ++a) {
    auto const &X = M.value(a);
    auto const &Y = N.value(a);
    for (int n = X.lo(); n <= X.hi(); ++n) {
      Matrix dy = Y.differential(n);
      Matrix dx = X.differential(n);
      for (std::size_t i = 0; i < X.dim(n); ++i) {
        std::map<std::size_t, std::vector<SparseVec::Entry>> acc;  // row t of Y_{n-1}
        if (Y.dim(n - 1) > 0) {
          for (std::size_t j = 0; j < Y.dim(n); ++j)
            for (auto const &[t, c] : dy.column(j))
              acc[t].emplace_back(var(a, n, j, i), c);
          if (X.dim(n - 1) > 0)
            for (auto const &[k, c] : dx.column(i))
              for (std::size_t t = 0; t < Y.dim(n - 1); ++t)
                acc[t].emplace_back(var(a, n - 1, t, k), -c);
        }
        flush(acc);
      }
    }
  }

  // f_a(x·φ) - f_b(x)·φ = 0
  for (int a = 0; a < E.size(); ++a)
    for (int b = 0; b < E.size(); ++b) {
      auto const &Mb = M.value(b);
      auto const &Ma = M.value(a);
      auto const &Na = N.value(a);
      auto const &Nb = N.value(b);
      for (std::size_t x = 0; x < Mb.total_dim(); ++x)
        for (std::size_t phi = 0; phi < E.hom(a, b).total_dim(); ++phi) {
          std::map<std::size_t, std::vector<SparseVec::Entry>> acc;  // global index in N(a)
          for (auto const &[i, c] : M.act_basis(a, b, x, phi)) {
            int n = Ma.degree_of(i);
            std::size_t col = i - Ma.offset(n);
            for (std::size_t t = 0; t < Na.dim(n); ++t)
              acc[Na.offset(n) + t].emplace_back(var(a, n, t, col), c);
          }
          int nx = Mb.degree_of(x);
          std::size_t colx = x - Mb.offset(nx);
          for (std::size_t j = 0; j < Nb.dim(nx); ++j)
            for (auto const &[t, c] : N.act_basis(a, b, Nb.offset(nx) + j, phi))
              acc[t].emplace_back(var(b, nx, j, colx), -c);
          flush(acc);
        }
    }

  if (unknowns == 0)
    return 0;
  return unknowns - rank(Matrix::from_rows(unknowns, rows));
}

// Coend -----------------------------------------------------------------------

Coend::Coend(Bifunctor F) : f_(std::move(F))
{
  auto const &C = *f_.base;
  std::size_t k = f_.objects.size();
  for (int d : f_.objects)
    diag_.push_back(f_.value(d, d));

  int lo = 0, hi = -1;
  bool any = false;
  for (auto const &D : diag_)
    if (!D.empty() && D.total_dim() > 0) {
      lo = any ? std::min(lo, D.lo()) : D.lo();
      hi = any ? std::max(hi, D.hi()) : D.hi();
      any = true;
    }
  for (int n = lo; n <= hi; ++n) {
    std::size_t off = 0;
    std::vector<std::size_t> offs;
    for (auto const &D : diag_) {
      offs.push_back(off);
      off += D.dim(n);
    }
    block_offset_[n] = std::move(offs);
    ambient_dim_[n] = off;
  }

  auto embed = [&](std::size_t s, SparseVec const &v, std::map<int, std::vector<SparseVec::Entry>> &acc,
                   Rational const &coeff) {
    auto const &D = diag_[s];
    for (auto const &[i, c] : v) {
      int n = D.degree_of(i);
      acc[n].emplace_back(block_offset_.at(n)[s] + (i - D.offset(n)), coeff * c);
    }
  };

  std::map<int, std::vector<SparseVec>> relations;
  for (std::size_t sb = 0; sb < k; ++sb)
    for (std::size_t sc = 0; sc < k; ++sc) {
      int b = f_.objects[sb], c = f_.objects[sc];
      ChainComplex Fbc = f_.value(b, c);
      auto const &Ccb = C.hom(c, b);
      for (std::size_t x = 0; x < Fbc.total_dim(); ++x)
        for (std::size_t phi = 0; phi < Ccb.total_dim(); ++phi) {
          int dx = Fbc.degree_of(x), dphi = Ccb.degree_of(phi);
          std::map<int, std::vector<SparseVec::Entry>> acc;
          embed(sb, f_.covariant(b, c, b, x, phi), acc, 1);
          embed(sc, f_.contravariant(c, b, c, phi, x), acc, -koszul(dx, dphi));
          for (auto &[n, entries] : acc) {
            if (n != dx + dphi)
              throw InvalidInputError("bifunctor action does not preserve degree");
            SparseVec r = SparseVec::from_unsorted(std::move(entries));
            if (!r.empty())
              relations[n].push_back(std::move(r));
          }
        }
    }

  for (int n = lo; n <= hi; ++n)
    quotient_.emplace(n, cokernel_of_span(ambient_dim_.at(n), relations[n]));

  // D on the ambient in degree n, as a map of global-in-degree vectors
  auto ambient_boundary = [&](int n, SparseVec const &v) {
    std::vector<SparseVec::Entry> out;
    if (ambient_dim_.count(n - 1) == 0)
      return SparseVec{};
    for (std::size_t s = 0; s < k; ++s) {
      auto const &D = diag_[s];
      if (D.dim(n) == 0 || D.dim(n - 1) == 0)
        continue;
      SparseVec part = v.slice(block_offset_.at(n)[s], D.dim(n));
      if (part.empty())
        continue;
      for (auto const &[i, c] : D.differential(n).apply(part))
        out.emplace_back(block_offset_.at(n - 1)[s] + i, c);
    }
    return SparseVec::from_unsorted(std::move(out));
  };

  for (int n = lo + 1; n <= hi; ++n)
    for (auto const &r : relations[n])
      if (!quotient_.at(n - 1).quotient.apply(ambient_boundary(n, r)).empty())
        throw InvalidInputError("bifunctor actions are not chain maps (relations do not form a subcomplex)");

  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    auto const &q = quotient_.at(n);
    dims.push_back(q.dim());
    if (n > lo) {
      std::vector<SparseVec> cols;
      for (std::size_t j = 0; j < q.dim(); ++j)
        cols.push_back(quotient_.at(n - 1).quotient.apply(ambient_boundary(n, q.section.column(j))));
      diffs.push_back(Matrix::from_columns(quotient_.at(n - 1).dim(), std::move(cols)));
    }
  }
  complex_ = any ? ChainComplex::of_vector_spaces(lo, std::move(dims), std::move(diffs))
                 : ChainComplex::zero(trivial_group());
}

std::size_t Coend::slot(int d) const
{
  for (std::size_t s = 0; s < f_.objects.size(); ++s)
    if (f_.objects[s] == d)
      return s;
  throw InvalidInputError("object " + std::to_string(d) + " is not among the coend's objects");
}

ChainComplex const &Coend::diagonal(int d) const
{
  return diag_[slot(d)];
}

SparseVec Coend::project(int d, SparseVec const &x) const
{
  std::size_t s = slot(d);
  auto const &D = diag_[s];
  SparseVec out;
  for (int n = D.lo(); n <= D.hi(); ++n) {
    SparseVec part = degree_part(D, x, n);
    if (part.empty())
      continue;
    SparseVec amb = part.shifted(block_offset_.at(n)[s]);
    out = out + from_degree(complex_, quotient_.at(n).quotient.apply(amb), n);
  }
  return out;
}

std::vector<std::pair<int, SparseVec>> Coend::representative(std::size_t b) const
{
  int n = complex_.degree_of(b);
  SparseVec amb = quotient_.at(n).section.column(b - complex_.offset(n));
  std::vector<std::pair<int, SparseVec>> out;
  for (std::size_t s = 0; s < diag_.size(); ++s) {
    SparseVec part = amb.slice(block_offset_.at(n)[s], diag_[s].dim(n));
    if (!part.empty())
      out.emplace_back(f_.objects[s], from_degree(diag_[s], part, n));
  }
  return out;
}

// Co-Yoneda -------------------------------------------------------------------

namespace {

std::vector<int> all_objects(DGCategory const &C)
{
  std::vector<int> objs;
  for (int a = 0; a < C.size(); ++a)
    objs.push_back(a);
  return objs;
}

// Tensor bases for every ordered pair, built on demand.
class PairBases
{
public:
  PairBases(std::size_t n, std::function<TensorBasis(int, int)> make)
      : n_(n), make_(std::move(make)), cache_(n * n)
  {
  }

  TensorBasis const &at(int a, int b)
  {
    auto &slot = cache_[std::size_t(a) * n_ + std::size_t(b)];
    std::lock_guard lock(mutex_);
    if (!slot)
      slot = std::make_unique<TensorBasis>(make_(a, b));
    return *slot;
  }

private:
  std::size_t n_;
  std::function<TensorBasis(int, int)> make_;
  std::vector<std::unique_ptr<TensorBasis>> cache_;
  std::mutex mutex_;
};

// F(a,a') = G(a) ⊗ C(b,a')
Bifunctor coyoneda_bifunctor(std::shared_ptr<DGModule const> G, int b)
{
  CategoryPtr C = G->base();
  auto bases = std::make_shared<PairBases>(std::size_t(C->size()), [G, C, b](int a, int a2) {
    return TensorBasis(G->value(a), C->hom(b, a2));
  });
  Bifunctor F;
  F.base = C;
  F.objects = all_objects(*C);
  F.value = [bases](int a, int a2) { return bases->at(a, a2).complex(); };
  F.covariant = [G, C, b, bases](int a, int a2, int a3, std::size_t x, std::size_t phi) {
    auto [g, psi] = bases->at(a, a2).split(x);
    int dg = G->value(a).degree_of(g);
    int dphi = C->hom(a2, a3).degree_of(phi);
    SparseVec out = bases->at(a, a3).combine(SparseVec::unit(g), C->compose_basis(b, a2, a3, phi, psi));
    return out.scaled(koszul(dphi, dg));
  };
  F.contravariant = [G, C, b, bases](int a0, int a, int a2, std::size_t phi, std::size_t x) {
    auto [g, psi] = bases->at(a, a2).split(x);
    int dpsi = C->hom(b, a2).degree_of(psi);
    int dphi = C->hom(a0, a).degree_of(phi);
    SparseVec out = bases->at(a0, a2).combine(G->act_basis(a0, a, g, phi), SparseVec::unit(psi));
    return out.scaled(koszul(dpsi, dphi));
  };
  return F;
}

}  // namespace

Coend coyoneda_coend(DGModule const &G, int b)
{
  return Coend(coyoneda_bifunctor(std::make_shared<DGModule const>(G), b));
}

ChainMap coyoneda_map(DGModule const &G, int b, Coend const &coend)
{
  CategoryPtr C = G.base();
  auto image = [&](std::size_t idx) {
    SparseVec out;
    for (auto const &[d, v] : coend.representative(idx)) {
      TensorBasis tb(G.value(d), C->hom(b, d));
      for (auto const &[i, c] : v) {
        auto [g, psi] = tb.split(i);
        out.add_scaled(G.act_basis(b, d, g, psi), c);
      }
    }
    return out;
  };
  return linear_chain_map(coend.complex(), G.value(b), image);
}

DGModule coyoneda_module(DGModule const &G)
{
  auto Gp = std::make_shared<DGModule const>(G);
  CategoryPtr C = G.base();
  auto coends = std::make_shared<std::vector<Coend>>();
  std::vector<ChainComplex> values;
  for (int b = 0; b < C->size(); ++b) {
    coends->emplace_back(coyoneda_bifunctor(Gp, b));
    values.push_back(coends->back().complex());
  }
  // [x ⊗ ψ]·φ = [x ⊗ ψ∘φ]
  auto act = [Gp, C, coends](int b2, int b, std::size_t t, std::size_t phi) {
    SparseVec out;
    for (auto const &[d, v] : (*coends)[std::size_t(b)].representative(t)) {
      TensorBasis from(Gp->value(d), C->hom(b, d));
      TensorBasis to(Gp->value(d), C->hom(b2, d));
      SparseVec lifted;
      for (auto const &[i, c] : v) {
        auto [g, psi] = from.split(i);
        lifted.add_scaled(to.combine(SparseVec::unit(g), C->compose_basis(b2, b, d, psi, phi)), c);
      }
      out = out + (*coends)[std::size_t(b2)].project(d, lifted);
    }
    return out;
  };
  return DGModule(C, std::move(values), act);
}

std::pair<GradedDims, GradedDims> fubini_dims(DGModule const &G, int x0)
{
  CategoryPtr C = G.base();
  GradedDims first = coyoneda_coend(coyoneda_module(G), x0).complex().dims();

  // Q(a') = ∫^b C(b,a') ⊗ C(x0,b), covariant in a'
  auto Q = std::make_shared<std::vector<Coend>>();
  for (int a2 = 0; a2 < C->size(); ++a2) {
    auto bases = std::make_shared<PairBases>(std::size_t(C->size()), [C, a2, x0](int b, int b2) {
      return TensorBasis(C->hom(b, a2), C->hom(x0, b2));
    });
    Bifunctor F;
    F.base = C;
    F.objects = all_objects(*C);
    F.value = [bases](int b, int b2) { return bases->at(b, b2).complex(); };
    F.covariant = [C, x0, a2, bases](int b, int c, int c2, std::size_t x, std::size_t phi) {
      auto [psi, chi] = bases->at(b, c).split(x);
      int dpsi = C->hom(b, a2).degree_of(psi);
      int dphi = C->hom(c, c2).degree_of(phi);
      return bases->at(b, c2)
          .combine(SparseVec::unit(psi), C->compose_basis(x0, c, c2, phi, chi))
          .scaled(koszul(dphi, dpsi));
    };
    F.contravariant = [C, x0, a2, bases](int b0, int b, int c, std::size_t phi, std::size_t x) {
      auto [psi, chi] = bases->at(b, c).split(x);
      int dchi = C->hom(x0, c).degree_of(chi);
      int dphi = C->hom(b0, b).degree_of(phi);
      return bases->at(b0, c)
          .combine(C->compose_basis(b0, b, a2, psi, phi), SparseVec::unit(chi))
          .scaled(koszul(dchi, dphi));
    };
    Q->emplace_back(std::move(F));
  }
  // φ·[ψ ⊗ χ] = [φ∘ψ ⊗ χ] for φ ∈ C(a', a'')
  auto q_act = [C, Q, x0](int a2, int a3, std::size_t q, std::size_t phi) {
    SparseVec out;
    for (auto const &[b, v] : (*Q)[std::size_t(a2)].representative(q)) {
      TensorBasis from(C->hom(b, a2), C->hom(x0, b));
      TensorBasis to(C->hom(b, a3), C->hom(x0, b));
      SparseVec lifted;
      for (auto const &[i, c] : v) {
        auto [psi, chi] = from.split(i);
        lifted.add_scaled(to.combine(C->compose_basis(b, a2, a3, phi, psi), SparseVec::unit(chi)), c);
      }
      out = out + (*Q)[std::size_t(a3)].project(b, lifted);
    }
    return out;
  };

  auto Gp = std::make_shared<DGModule const>(G);
  auto bases = std::make_shared<PairBases>(std::size_t(C->size()), [Gp, Q](int a, int a2) {
    return TensorBasis(Gp->value(a), (*Q)[std::size_t(a2)].complex());
  });
  Bifunctor F;
  F.base = C;
  F.objects = all_objects(*C);
  F.value = [bases](int a, int a2) { return bases->at(a, a2).complex(); };
  F.covariant = [Gp, C, Q, bases, q_act](int a, int a2, int a3, std::size_t x, std::size_t phi) {
    auto [g, q] = bases->at(a, a2).split(x);
    int dg = Gp->value(a).degree_of(g);
    int dphi = C->hom(a2, a3).degree_of(phi);
    return bases->at(a, a3).combine(SparseVec::unit(g), q_act(a2, a3, q, phi)).scaled(koszul(dphi, dg));
  };
  F.contravariant = [Gp, C, Q, bases](int a0, int a, int a2, std::size_t phi, std::size_t x) {
    auto [g, q] = bases->at(a, a2).split(x);
    int dq = (*Q)[std::size_t(a2)].complex().degree_of(q);
    int dphi = C->hom(a0, a).degree_of(phi);
    return bases->at(a0, a2).combine(Gp->act_basis(a0, a, g, phi), SparseVec::unit(q)).scaled(koszul(dq, dphi));
  };
  GradedDims second = Coend(std::move(F)).complex().dims();
  return {first, second};
}

// Change of scalars -------------------------------------------------------------

DGModule restrict_scalars(EnrichedFunctor const &psi, DGModule const &N)
{
  if (psi.target != N.base())
    throw InvalidInputError("restriction along a functor into a different category");
  std::vector<ChainComplex> values;
  for (int a = 0; a < psi.source->size(); ++a)
    values.push_back(N.value(psi.object_map[std::size_t(a)]));
  auto Np = std::make_shared<DGModule const>(N);
  auto F = std::make_shared<EnrichedFunctor const>(psi);
  auto act = [Np, F](int a, int b, std::size_t x, std::size_t phi) {
    int pa = F->object_map[std::size_t(a)], pb = F->object_map[std::size_t(b)];
    return Np->act(pa, pb, SparseVec::unit(x), F->apply(a, b, SparseVec::unit(phi)));
  };
  return DGModule(psi.source, std::move(values), act);
}

namespace {

struct Extension
{
  std::shared_ptr<DGModule const> module;
  std::shared_ptr<std::vector<Coend>> coends;  // one per object of the target
  std::shared_ptr<std::vector<std::shared_ptr<PairBases>>> bases;
};

// (M ⊗_E D)(d) = ∫^a M(a) ⊗ D(d, ψa)
Extension extend(EnrichedFunctor const &psi, std::shared_ptr<DGModule const> const &M)
{
  if (psi.source != M->base())
    throw InvalidInputError("extension along a functor from a different category");
  auto F = std::make_shared<EnrichedFunctor const>(psi);
  CategoryPtr E = psi.source, D = psi.target;
  auto coends = std::make_shared<std::vector<Coend>>();
  auto all_bases = std::make_shared<std::vector<std::shared_ptr<PairBases>>>();
  std::vector<ChainComplex> values;
  for (int d = 0; d < D->size(); ++d) {
    auto bases = std::make_shared<PairBases>(std::size_t(E->size()), [M, D, F, d](int a, int a2) {
      return TensorBasis(M->value(a), D->hom(d, F->object_map[std::size_t(a2)]));
    });
    all_bases->push_back(bases);
    Bifunctor B;
    B.base = E;
    B.objects = all_objects(*E);
    B.value = [bases](int a, int a2) { return bases->at(a, a2).complex(); };
    B.covariant = [M, D, F, d, bases](int a, int a2, int a3, std::size_t x, std::size_t phi) {
      auto [m, chi] = bases->at(a, a2).split(x);
      int dm = M->value(a).degree_of(m);
      int dphi = F->source->hom(a2, a3).degree_of(phi);
      int p2 = F->object_map[std::size_t(a2)], p3 = F->object_map[std::size_t(a3)];
      SparseVec image = D->compose(d, p2, p3, F->apply(a2, a3, SparseVec::unit(phi)), SparseVec::unit(chi));
      return bases->at(a, a3).combine(SparseVec::unit(m), image).scaled(koszul(dphi, dm));
    };
    B.contravariant = [M, D, F, d, bases](int a0, int a, int a2, std::size_t phi, std::size_t x) {
      auto [m, chi] = bases->at(a, a2).split(x);
      int dchi = D->hom(d, F->object_map[std::size_t(a2)]).degree_of(chi);
      int dphi = F->source->hom(a0, a).degree_of(phi);
      return bases->at(a0, a2).combine(M->act_basis(a0, a, m, phi), SparseVec::unit(chi)).scaled(koszul(dchi, dphi));
    };
    coends->emplace_back(std::move(B));
    values.push_back(coends->back().complex());
  }
  // [m ⊗ χ]·δ = [m ⊗ χ∘δ] for δ ∈ D(d2, d)
  auto act = [M, D, F, coends, all_bases](int d2, int d, std::size_t t, std::size_t delta) {
    SparseVec out;
    for (auto const &[a, v] : (*coends)[std::size_t(d)].representative(t)) {
      auto &from = (*all_bases)[std::size_t(d)]->at(a, a);
      auto &to = (*all_bases)[std::size_t(d2)]->at(a, a);
      int pa = F->object_map[std::size_t(a)];
      SparseVec lifted;
      for (auto const &[i, c] : v) {
        auto [m, chi] = from.split(i);
        lifted.add_scaled(to.combine(SparseVec::unit(m), D->compose_basis(d2, d, pa, chi, delta)), c);
      }
      out = out + (*coends)[std::size_t(d2)].project(a, lifted);
    }
    return out;
  };
  return Extension{std::make_shared<DGModule const>(D, std::move(values), act), coends, all_bases};
}

}  // namespace

DGModule extend_scalars(EnrichedFunctor const &psi, DGModule const &M)
{
  return *extend(psi, std::make_shared<DGModule const>(M)).module;
}

ModuleMap extension_unit(EnrichedFunctor const &psi, std::shared_ptr<DGModule const> const &M)
{
  Extension ext = extend(psi, M);
  auto target = std::make_shared<DGModule const>(restrict_scalars(psi, *ext.module));
  ModuleMap f{M, target, {}};
  for (int a = 0; a < M->base()->size(); ++a) {
    int pa = psi.object_map[std::size_t(a)];
    auto &tb = (*ext.bases)[std::size_t(pa)]->at(a, a);
    SparseVec id = psi.target->identity(pa);
    Coend const &coend = (*ext.coends)[std::size_t(pa)];
    f.components.push_back(linear_chain_map(M->value(a), target->value(a), [&](std::size_t x) {
      return coend.project(a, tb.combine(SparseVec::unit(x), id));
    }));
  }
  return f;
}

// Generic box product -----------------------------------------------------------

DGModule box_product_over(DGModule const &M, DGModule const &N, MonoidalDGStructure const &S,
                          std::vector<int> const &objects)
{
  CategoryPtr E = M.base();
  if (N.base() != E)
    throw InvalidInputError("box product of modules over different categories");
  std::vector<int> tensor_of;  // per pair slot
  std::size_t k = objects.size();
  for (int b : objects)
    for (int c : objects) {
      auto t = S.tensor_objects(b, c);
      if (!t)
        throw TruncationError("box product needs " + objects_string({b, c}) +
                              " whose tensor lies beyond the truncation range");
      tensor_of.push_back(*t);
    }

  // The product category on pairs drawn from `objects`.
  auto hom_bases = std::make_shared<std::vector<TensorBasis>>();
  std::vector<ChainComplex> homs;
  std::vector<std::string> labels;
  std::vector<SparseVec> ids;
  for (std::size_t p = 0; p < k * k; ++p) {
    labels.push_back(E->label(objects[p / k]) + "," + E->label(objects[p % k]));
    for (std::size_t q = 0; q < k * k; ++q) {
      hom_bases->emplace_back(E->hom(objects[p / k], objects[q / k]), E->hom(objects[p % k], objects[q % k]));
      homs.push_back(hom_bases->back().complex());
    }
  }
  for (std::size_t p = 0; p < k * k; ++p)
    ids.push_back((*hom_bases)[p * k * k + p].combine(E->identity(objects[p / k]), E->identity(objects[p % k])));
  auto objs = std::make_shared<std::vector<int> const>(objects);
  auto compose = [E, hom_bases, objs](int p, int q, int r, std::size_t g, std::size_t f) {
    std::size_t k = objs->size(), kk = k * k;
    auto const &gb = (*hom_bases)[std::size_t(q) * kk + std::size_t(r)];
    auto const &fb = (*hom_bases)[std::size_t(p) * kk + std::size_t(q)];
    auto const &out = (*hom_bases)[std::size_t(p) * kk + std::size_t(r)];
    auto [g1, g2] = gb.split(g);
    auto [f1, f2] = fb.split(f);
    auto ob = [&](int x, bool first) { return (*objs)[first ? std::size_t(x) / k : std::size_t(x) % k]; };
    int dg2 = E->hom(ob(q, false), ob(r, false)).degree_of(g2);
    int df1 = E->hom(ob(p, true), ob(q, true)).degree_of(f1);
    SparseVec c1 = E->compose_basis(ob(p, true), ob(q, true), ob(r, true), g1, f1);
    SparseVec c2 = E->compose_basis(ob(p, false), ob(q, false), ob(r, false), g2, f2);
    return out.combine(c1, c2).scaled(koszul(dg2, df1));
  };
  auto P = std::make_shared<DGCategory const>(std::move(labels), std::move(homs), compose, std::move(ids));

  auto Mp = std::make_shared<DGModule const>(M);
  auto Np = std::make_shared<DGModule const>(N);
  auto Sp = std::make_shared<MonoidalDGStructure const>(S);
  auto tensors = std::make_shared<std::vector<int> const>(tensor_of);
  auto coends = std::make_shared<std::vector<Coend>>();
  struct Bases
  {
    std::vector<std::unique_ptr<TensorBasis>> pair;    // M(b) ⊗ N(c), per pair slot
    std::vector<std::unique_ptr<TensorBasis>> triple;  // (M(b)⊗N(c)) ⊗ E(a, b'⊗c'), per slot pair
  };
  auto all_bases = std::make_shared<std::vector<std::shared_ptr<Bases>>>();
  std::vector<ChainComplex> values;
  for (int a = 0; a < E->size(); ++a) {
    auto bases = std::make_shared<Bases>();
    for (std::size_t p = 0; p < k * k; ++p)
      bases->pair.push_back(std::make_unique<TensorBasis>(Mp->value(objects[p / k]), Np->value(objects[p % k])));
    for (std::size_t p = 0; p < k * k; ++p)
      for (std::size_t q = 0; q < k * k; ++q)
        bases->triple.push_back(
            std::make_unique<TensorBasis>(bases->pair[p]->complex(), E->hom(a, tensor_of[q])));
    all_bases->push_back(bases);
    Bifunctor B;
    B.base = P;
    for (std::size_t p = 0; p < k * k; ++p)
      B.objects.push_back(int(p));
    B.value = [bases, k](int p, int q) { return bases->triple[std::size_t(p) * k * k + std::size_t(q)]->complex(); };
    B.covariant = [=](int p, int q, int q2, std::size_t x, std::size_t phi) {
      std::size_t kk = k * k;
      auto const &from = *bases->triple[std::size_t(p) * kk + std::size_t(q)];
      auto const &to = *bases->triple[std::size_t(p) * kk + std::size_t(q2)];
      auto [xy, psi] = from.split(x);
      int dxy = bases->pair[std::size_t(p)]->complex().degree_of(xy);
      auto [f1, f2] = (*hom_bases)[std::size_t(q) * kk + std::size_t(q2)].split(phi);
      int b1 = (*objs)[std::size_t(q) / k], c1 = (*objs)[std::size_t(q) % k];
      int b2 = (*objs)[std::size_t(q2) / k], c2 = (*objs)[std::size_t(q2) % k];
      int dphi = P->hom(q, q2).degree_of(phi);
      SparseVec ff = Sp->tensor_basis(b1, c1, b2, c2, f1, f2);
      SparseVec image = E->compose(a, (*tensors)[std::size_t(q)], (*tensors)[std::size_t(q2)], ff, SparseVec::unit(psi));
      return to.combine(SparseVec::unit(xy), image).scaled(koszul(dphi, dxy));
    };
    B.contravariant = [=](int p0, int p, int q, std::size_t phi, std::size_t x) {
      std::size_t kk = k * k;
      auto const &from = *bases->triple[std::size_t(p) * kk + std::size_t(q)];
      auto const &to = *bases->triple[std::size_t(p0) * kk + std::size_t(q)];
      auto [xy, psi] = from.split(x);
      auto [mx, ny] = bases->pair[std::size_t(p)]->split(xy);
      auto [f1, f2] = (*hom_bases)[std::size_t(p0) * kk + std::size_t(p)].split(phi);
      int b0 = (*objs)[std::size_t(p0) / k], c0 = (*objs)[std::size_t(p0) % k];
      int b = (*objs)[std::size_t(p) / k], c = (*objs)[std::size_t(p) % k];
      int dphi = P->hom(p0, p).degree_of(phi);
      int dpsi = E->hom(a, (*tensors)[std::size_t(q)]).degree_of(psi);
      int dy = Np->value(c).degree_of(ny);
      int df1 = E->hom(b0, b).degree_of(f1);
      SparseVec xs = Mp->act_basis(b0, b, mx, f1);
      SparseVec ys = Np->act_basis(c0, c, ny, f2);
      SparseVec xy2 = bases->pair[std::size_t(p0)]->combine(xs, ys);
      return to.combine(xy2, SparseVec::unit(psi)).scaled(koszul(dphi, dpsi) * koszul(dy, df1));
    };
    coends->emplace_back(std::move(B));
    values.push_back(coends->back().complex());
  }
  // [x ⊗ y ⊗ ψ]·φ = [x ⊗ y ⊗ ψ∘φ]
  auto act = [E, coends, all_bases, tensors, k](int a2, int a, std::size_t t, std::size_t phi) {
    SparseVec out;
    std::size_t kk = k * k;
    for (auto const &[p, v] : (*coends)[std::size_t(a)].representative(t)) {
      auto const &from = *(*all_bases)[std::size_t(a)]->triple[std::size_t(p) * kk + std::size_t(p)];
      auto const &to = *(*all_bases)[std::size_t(a2)]->triple[std::size_t(p) * kk + std::size_t(p)];
      int tp = (*tensors)[std::size_t(p)];
      SparseVec lifted;
      for (auto const &[i, c] : v) {
        auto [xy, psi] = from.split(i);
        lifted.add_scaled(to.combine(SparseVec::unit(xy), E->compose_basis(a2, a, tp, psi, phi)), c);
      }
      out = out + (*coends)[std::size_t(a2)].project(p, lifted);
    }
    return out;
  };
  return DGModule(E, std::move(values), act);
}

// Reduced box product -----------------------------------------------------------

std::vector<Matrix> right_translations(DGModule const &M)
{
  auto const &S = ea_of(M.base());
  auto const &X = M.value(1);
  std::vector<Matrix> out;
  for (std::size_t g = 0; g < S.order(); ++g) {
    std::vector<SparseVec> cols;
    std::size_t r = S.right_translation(g);
    for (std::size_t j = 0; j < X.total_dim(); ++j)
      cols.push_back(M.act_basis(1, 1, j, r));
    out.push_back(Matrix::from_columns(X.total_dim(), std::move(cols)));
  }
  return out;
}

struct ReducedBox::Impl
{
  EaStructure const *S = nullptr;
  std::vector<Matrix> rho_m, rho_n;
  std::mutex mutex;
  std::map<int, std::unique_ptr<OrbitCoinvariants>> values;
};

ReducedBox::ReducedBox(DGModule const &M, DGModule const &N)
    : impl_(std::make_shared<Impl>()), m_(std::make_shared<DGModule const>(M)),
      n_(std::make_shared<DGModule const>(N))
{
  if (M.base() != N.base())
    throw InvalidInputError("box product of modules over different categories");
  auto const &S = ea_of(M.base());
  if (S.n_max() < 2)
    throw TruncationError("box product needs (1,1) whose tensor 2 lies beyond the truncation range");
  impl_->S = &S;
  impl_->rho_m = right_translations(M);
  impl_->rho_n = right_translations(N);
  pair_ = std::make_shared<TensorBasis const>(M.value(1), N.value(1));
}

SparseVec ReducedBox::translate(std::size_t u, std::size_t v, SparseVec const &r) const
{
  SparseVec out;
  for (auto const &[i, c] : r) {
    auto [x, y] = pair_->split(i);
    out.add_scaled(pair_->combine(impl_->rho_m[u].column(x), impl_->rho_n[v].column(y)), c);
  }
  return out;
}

std::size_t ReducedBox::translate_key(int a, std::size_t u, std::size_t v, std::size_t f) const
{
  auto const &S = *impl_->S;
  auto const &W = *S.weyl();
  auto [x, y] = S.representative(a, 2, f);
  auto t = S.point_tuple(2, y);
  t[0] = W.multiply(t[0], W.inverse(u));
  t[1] = W.multiply(t[1], W.inverse(v));
  return S.orbit_index(a, x, 2, S.point_index(t));
}

ChainComplex const &ReducedBox::at(int a) const
{
  std::lock_guard lock(impl_->mutex);
  auto it = impl_->values.find(a);
  if (it == impl_->values.end()) {
    auto const &S = *impl_->S;
    std::size_t w = S.order();
    ProductAction action;
    action.order = w * w;
    action.inverse = [&S, w](std::size_t k) {
      return S.weyl()->inverse(k / w) * w + S.weyl()->inverse(k % w);
    };
    action.on_point = [this, a, w](std::size_t k, std::size_t s) { return translate_key(a, k / w, k % w, s); };
    action.on_vector = [this, w](std::size_t k, SparseVec const &r) { return translate(k / w, k % w, r); };
    auto value = std::make_unique<OrbitCoinvariants>(pair_->complex(), S.hom_dim(a, 2), std::move(action));
    it = impl_->values.emplace(a, std::move(value)).first;
  }
  return it->second->complex();
}

std::pair<SparseVec, std::size_t> ReducedBox::representative(int a, std::size_t b) const
{
  at(a);
  auto const &C = *impl_->values.at(a);
  auto [o, r] = C.representative(b);
  return {r, C.orbit_rep(o)};
}

SparseVec ReducedBox::project(int a, SparseVec const &r, std::size_t key) const
{
  at(a);
  return impl_->values.at(a)->project(r, key);
}

DGModule ReducedBox::module() const
{
  std::vector<ChainComplex> values;
  for (int a = 0; a <= impl_->S->n_max(); ++a)
    values.push_back(at(a));
  ReducedBox self = *this;
  CategoryPtr E = m_->base();
  // [r ⊗ f]·ψ = [r ⊗ f∘ψ]
  auto act = [self, E](int a2, int a, std::size_t b, std::size_t psi) {
    auto [r, f] = self.representative(a, b);
    SparseVec out;
    for (auto const &[t, c] : E->compose_basis(a2, a, 2, f, psi))
      out.add_scaled(self.project(a2, r, t), c);
    return out;
  };
  return DGModule(E, std::move(values), act);
}

// Generator adjunction ----------------------------------------------------------

ChainComplex tensor_with_generators(DGModule const &M)
{
  auto const &S = ea_of(M.base());
  GroupPtr W = S.weyl();
  auto const &X = M.value(1);
  if (X.empty())
    return ChainComplex::zero(W);
  auto rho = right_translations(M);
  std::vector<GRepresentation> terms;
  std::vector<Matrix> diffs;
  for (int n = X.lo(); n <= X.hi(); ++n) {
    std::vector<Matrix> gens;
    for (auto g : W->generator_indices())
      gens.push_back(rho[g].block(X.offset(n), X.dim(n), X.offset(n), X.dim(n)));
    terms.emplace_back(W, X.dim(n), std::move(gens));
    if (n > X.lo())
      diffs.push_back(X.differential(n));
  }
  return ChainComplex(W, X.lo(), std::move(terms), std::move(diffs));
}

namespace {

// [m ⊗ s] ↦ m·h_s in M(1), for m ∈ M(d) and a point s of V_d.
SparseVec generator_class(DGModule const &M, int d, std::size_t m, std::size_t s)
{
  auto const &S = ea_of(M.base());
  if (d == 0)
    return M.act_basis(1, 0, m, S.augmentation());
  return M.act_basis(1, d, m, S.translate_to(d, s));
}

ChainComplex points_complex(EaStructure const &S, int j)
{
  return ChainComplex::concentrated(GRepresentation::trivial(trivial_group(), S.points(j)), 0);
}

}  // namespace

FullGeneratorTensor tensor_with_generators_full(DGModule const &M, std::vector<int> const &objects)
{
  auto const &S = ea_of(M.base());
  auto Mp = std::make_shared<DGModule const>(M);
  CategoryPtr E = M.base();
  auto bases = std::make_shared<PairBases>(std::size_t(E->size()), [Mp, &S](int i, int j) {
    return TensorBasis(Mp->value(i), points_complex(S, j));
  });
  EaStructure const *Sp = &S;
  Bifunctor B;
  B.base = E;
  B.objects = objects;
  B.value = [bases](int i, int j) { return bases->at(i, j).complex(); };
  B.covariant = [bases, Sp](int i, int j, int j2, std::size_t x, std::size_t phi) {
    auto [m, v] = bases->at(i, j).split(x);
    return bases->at(i, j2).combine(SparseVec::unit(m), Sp->apply(j, j2, phi, v));
  };
  B.contravariant = [bases, Mp](int i0, int i, int j, std::size_t phi, std::size_t x) {
    auto [m, v] = bases->at(i, j).split(x);
    return bases->at(i0, j).combine(Mp->act_basis(i0, i, m, phi), SparseVec::unit(v));
  };
  Coend coend(std::move(B));
  ChainMap comparison = linear_chain_map(coend.complex(), M.value(1), [&](std::size_t b) {
    SparseVec out;
    for (auto const &[d, v] : coend.representative(b))
      for (auto const &[i, c] : v) {
        auto [m, s] = bases->at(d, d).split(i);
        out.add_scaled(generator_class(M, d, m, s), c);
      }
    return out;
  });
  return FullGeneratorTensor{std::move(coend), std::move(comparison)};
}

Report check_generator_reduction(DGModule const &M, std::vector<int> const &objects)
{
  auto const &S = ea_of(M.base());
  auto full = tensor_with_generators_full(M, objects);
  auto rho = right_translations(M);
  Checker iso("generator reduction is an isomorphism");
  iso.record(is_isomorphism(full.comparison), [] { return "comparison map not invertible"; });

  Checker well("generator reduction kills the coend relations");
  Checker equi("generator reduction is equivariant");
  auto const &E = *M.base();
  for (int b : objects)
    for (int c : objects)
      for (std::size_t m = 0; m < M.value(b).total_dim(); ++m)
        for (std::size_t s = 0; s < S.points(c); ++s)
          for (std::size_t phi = 0; phi < E.hom(c, b).total_dim(); ++phi) {
            // φ·(m⊗s) = m ⊗ φ(s) and (m⊗s)·φ = m·φ ⊗ s agree after the map
            SparseVec lhs;
            for (auto const &[t, k] : S.apply(c, b, phi, s))
              lhs.add_scaled(generator_class(M, b, m, t), k);
            SparseVec rhs;
            for (auto const &[m2, k] : M.act_basis(c, b, m, phi))
              rhs.add_scaled(generator_class(M, c, m2, s), k);
            well.record(lhs == rhs, [&] {
              return "objects " + objects_string({b, c}) + " basis " + tuple_string({m, s, phi});
            });
          }
  for (int d : objects)
    for (std::size_t m = 0; m < M.value(d).total_dim(); ++m)
      for (std::size_t s = 0; s < S.points(d); ++s)
        for (auto g : S.weyl()->generator_indices()) {
          SparseVec lhs = generator_class(M, d, m, S.act_on_point(g, d, s));
          SparseVec rhs = rho[g].apply(generator_class(M, d, m, s));
          equi.record(lhs == rhs, [&] { return "object " + std::to_string(d) + " basis " + tuple_string({m, s, g}); });
        }
  Report r;
  r.checks = {iso.result, well.result, equi.result};
  return r;
}

DGModule underhom_generators(ChainComplex const &X, CategoryPtr const &E)
{
  auto const &S = ea_of(E);
  if (!(X.group() == S.weyl() || *X.group() == *S.weyl()))
    throw InvalidInputError("underhom needs a complex over the Weyl group of the category");
  auto Xp = std::make_shared<ChainComplex const>(X);
  auto fixed = std::make_shared<FixedPoints const>(fixed_points_with_inclusion(X));
  std::vector<ChainComplex> values;
  for (int i = 0; i <= S.n_max(); ++i) {
    if (i == 0) {
      values.push_back(fixed->complex);
      continue;
    }
    std::size_t reps = S.points(i - 1);
    if (X.empty()) {
      values.push_back(ChainComplex::zero(trivial_group()));
      continue;
    }
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int n = X.lo(); n <= X.hi(); ++n) {
      dims.push_back(reps * X.dim(n));
      if (n > X.lo())
        diffs.push_back(kron(Matrix::identity(reps), X.differential(n)));
    }
    values.push_back(ChainComplex::of_vector_spaces(X.lo(), std::move(dims), std::move(diffs), false));
  }
  auto vals = std::make_shared<std::vector<ChainComplex> const>(values);
  EaStructure const *Sp = &S;
  auto Ekeep = E;

  // u(y) for u given by (rep o, vector v of X_n) and a point y of W^j, j ≥ 1
  auto evaluate = [Xp, Sp](int j, std::size_t o, SparseVec const &v, int n, std::size_t y) -> SparseVec {
    std::size_t h = Sp->point_tuple(j, y)[0];
    std::size_t base = Sp->act_on_point(Sp->weyl()->inverse(h), j, y);
    if (base != o)
      return {};
    return Xp->term(n).action(h).apply(v);
  };

  auto act = [Xp, fixed, vals, Sp, evaluate, Ekeep](int i, int j, std::size_t u, std::size_t phi) -> SparseVec {
    auto const &U = (*vals)[std::size_t(j)];
    int n = U.degree_of(u);
    std::size_t local = u - U.offset(n);
    auto const &target = (*vals)[std::size_t(i)];
    auto [x0, y0] = Sp->representative(i, j, phi);

    // u as (o, v), or as a fixed vector when j = 0
    std::size_t o = 0;
    SparseVec v;
    if (j >= 1) {
      o = local / Xp->dim(n);
      v = SparseVec::unit(local % Xp->dim(n));
    } else {
      v = fixed->inclusion.at(n).column(local);
    }
    auto u_at = [&](std::size_t y) -> SparseVec { return j >= 1 ? evaluate(j, o, v, n, y) : v; };

    if (i >= 1) {
      // u∘φ is supported on the representative point x0 with value u(y0)
      SparseVec val = u_at(y0);
      return from_degree(target, val.shifted(x0 * Xp->dim(n)), n);
    }
    // i = 0: (u∘φ)(pt) = Σ_{y ∈ φ(pt)} u(y), a fixed vector
    SparseVec total;
    for (auto const &[y, c] : Sp->apply(0, j, phi, 0))
      total.add_scaled(u_at(y), c);
    if (total.empty())
      return {};
    auto coords = solve(fixed->inclusion.at(n), total);
    if (!coords)
      throw Error("underhom action left the fixed points");
    return from_degree(target, *coords, n);
  };
  return DGModule(E, std::move(values), act);
}

ChainMap counit(ChainComplex const &X, CategoryPtr const &E)
{
  ChainComplex T = tensor_with_generators(underhom_generators(X, E));
  std::vector<Matrix> comps;
  for (int n = T.lo(); n <= T.hi(); ++n)
    comps.push_back(Matrix::identity(T.dim(n)));
  return ChainMap(T, X, std::move(comps));
}

ModuleMap unit(std::shared_ptr<DGModule const> const &M)
{
  auto const &S = ea_of(M->base());
  ChainComplex T = tensor_with_generators(*M);
  auto target = std::make_shared<DGModule const>(underhom_generators(T, M->base()));
  FixedPoints fixed = fixed_points_with_inclusion(T);
  auto const &M1 = M->value(1);
  ModuleMap f{M, target, {}};
  for (int i = 0; i <= S.n_max(); ++i) {
    auto const &U = target->value(i);
    f.components.push_back(linear_chain_map(M->value(i), U, [&](std::size_t x) -> SparseVec {
      int n = M->value(i).degree_of(x);
      if (i == 0) {
        SparseVec cls = degree_part(M1, generator_class(*M, 0, x, 0), n);
        if (cls.empty())
          return {};
        auto coords = solve(fixed.inclusion.at(n), cls);
        if (!coords)
          throw Error("unit landed outside the fixed points");
        return from_degree(U, *coords, n);
      }
      SparseVec out;
      for (std::size_t o = 0; o < S.points(i - 1); ++o) {
        SparseVec cls = degree_part(M1, generator_class(*M, i, x, o), n);
        out = out + cls.shifted(U.offset(n) + o * M1.dim(n));
      }
      return out;
    }));
  }
  return f;
}

ChainMap monoidality_map(ReducedBox const &box)
{
  auto const &S = ea_of(box.left().base());
  ChainComplex const &src = box.at(1);
  return linear_chain_map(src, box.pair_basis().complex(), [&](std::size_t b) {
    auto [r, key] = box.representative(1, b);
    auto [x, y] = S.representative(1, 2, key);
    auto t = S.point_tuple(2, y);
    return box.translate(t[0], t[1], r);
  });
}

Report check_monoidality(ReducedBox const &box, std::uint64_t seed)
{
  auto const &S = ea_of(box.left().base());
  std::size_t w = S.order();
  auto phi_tilde = [&](SparseVec const &r, std::size_t key) {
    auto [x, y] = S.representative(1, 2, key);
    auto t = S.point_tuple(2, y);
    return box.translate(t[0], t[1], r);
  };

  Checker well("monoidality map is well defined on coinvariants");
  std::size_t rdim = box.pair_basis().complex().total_dim();
  for (auto const &t : sample_tuples({rdim, S.hom_dim(1, 2), w * w}, 512, mix_seed(seed, {31}))) {
    SparseVec r = SparseVec::unit(t[0]);
    std::size_t u = t[2] / w, v = t[2] % w;
    bool ok = phi_tilde(box.translate(u, v, r), box.translate_key(1, u, v, t[1])) == phi_tilde(r, t[1]);
    well.record(ok, [&] { return "basis " + tuple_string(t); });
  }

  Checker chain("monoidality map is a chain map");
  Checker iso("monoidality map is an isomorphism");
  Checker equi("monoidality map is equivariant");
  try {
    ChainMap Phi = monoidality_map(box);
    chain.record(true, [] { return std::string(); });
    iso.record(is_isomorphism(Phi), [&] {
      return "dims " + std::to_string(Phi.source().total_dim()) + " vs " + std::to_string(Phi.target().total_dim());
    });
    auto rho_m = right_translations(box.left());
    auto rho_n = right_translations(box.right());
    CategoryPtr E = box.left().base();
    for (auto g : S.weyl()->generator_indices())
      for (std::size_t b = 0; b < Phi.source().total_dim(); ++b) {
        auto [r, key] = box.representative(1, b);
        SparseVec moved;
        for (auto const &[t, c] : E->compose_basis(1, 1, 2, key, S.right_translation(g)))
          moved.add_scaled(box.project(1, r, t), c);
        SparseVec lhs = Phi.apply(moved);
        SparseVec rhs;
        for (auto const &[i, c] : Phi.apply(SparseVec::unit(b))) {
          auto [x, y] = box.pair_basis().split(i);
          rhs.add_scaled(box.pair_basis().combine(rho_m[g].column(x), rho_n[g].column(y)), c);
        }
        equi.record(lhs == rhs, [&] { return "generator " + std::to_string(g) + " basis " + std::to_string(b); });
      }
  } catch (Error const &e) {
    chain.record(false, [&] { return std::string(e.what()); });
  }
  Report rep;
  rep.checks = {well.result, chain.result, iso.result, equi.result};
  return rep;
}

ModuleMap unit_collapse(ReducedBox const &box)
{
  auto const &S = ea_of(box.left().base());
  CategoryPtr E = box.left().base();
  auto source = std::make_shared<DGModule const>(box.module());
  auto target = std::make_shared<DGModule const>(box.right());
  SparseVec id1 = S.identity(1);
  ModuleMap f{source, target, {}};
  for (int a = 0; a <= S.n_max(); ++a)
    f.components.push_back(linear_chain_map(source->value(a), target->value(a), [&](std::size_t b) {
      auto [r, key] = box.representative(a, b);
      SparseVec out;
      for (auto const &[i, c] : r) {
        auto [x, y] = box.pair_basis().split(i);
        SparseVec xt;
        for (auto const &[j, k] : id1)
          xt.add_scaled(S.tensor_basis(1, 1, 0, 1, x, j), k);
        SparseVec g = E->compose(a, 2, 1, xt, SparseVec::unit(key));
        out.add_scaled(target->act(a, 1, SparseVec::unit(y), g), c);
      }
      return out;
    }));
  return f;
}

}  // namespace eqmodel
