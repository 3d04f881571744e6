#include "eqmodel/dg_category.hpp"

#include <sstream>

#include "check_util.hpp"

namespace eqmodel {

bool Report::passed() const
{
  for (auto const &c : checks)
    if (!c.passed)
      return false;
  return true;
}

std::string Report::first_failure() const
{
  for (auto const &c : checks)
    if (!c.passed)
      return c.name + ": " + c.detail;
  return {};
}

namespace {

using detail::Checker;
using detail::koszul;

int degree_of_basis(ChainComplex const &x, std::size_t i)
{
  return x.degree_of(i);
}

std::vector<std::vector<std::size_t>> object_tuples(std::size_t n, std::size_t arity,
                                                    std::uint64_t seed, std::size_t budget)
{
  return sample_tuples(std::vector<std::size_t>(arity, n), budget, seed);
}

}  // namespace

// DGCategory ------------------------------------------------------------------

DGCategory::DGCategory(std::vector<std::string> labels, std::vector<ChainComplex> homs,
                       ComposeBasis compose, std::vector<SparseVec> identities)
    : labels_(std::move(labels)), homs_(std::move(homs)), compose_(std::move(compose)),
      identities_(std::move(identities))
{
  std::size_t n = labels_.size();
  if (homs_.size() != n * n)
    throw InvalidInputError("category needs one hom complex per ordered pair of objects");
  if (identities_.size() != n)
    throw InvalidInputError("category needs one identity per object");
  for (auto const &h : homs_)
    if (h.group()->order() != 1)
      throw InvalidInputError("hom complexes of a DG category are complexes of vector spaces");
}

ChainComplex const &DGCategory::hom(int a, int b) const
{
  return homs_.at(static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b));
}

SparseVec DGCategory::compose_basis(int a, int b, int c, std::size_t g, std::size_t f) const
{
  return compose_(a, b, c, g, f);
}

SparseVec DGCategory::compose(int a, int b, int c, SparseVec const &g, SparseVec const &f) const
{
  std::vector<SparseVec::Entry> out;
  for (auto const &[gi, gc] : g)
    for (auto const &[fi, fc] : f) {
      Rational coeff = gc * fc;
      for (auto const &[i, x] : compose_(a, b, c, gi, fi))
        out.emplace_back(i, coeff * x);
    }
  return SparseVec::from_unsorted(std::move(out));
}

Report check_category(DGCategory const &E, std::uint64_t seed)
{
  Report report;
  std::size_t n = static_cast<std::size_t>(E.size());

  Checker ident("identity is a degree-0 cycle");
  Checker unit("unit laws");
  for (int a = 0; a < E.size(); ++a) {
    auto const &id = E.identity(a);
    auto const &X = E.hom(a, a);
    ident.record(from_degree(X, degree_part(X, id, 0), 0) == id && boundary(X, id).empty(),
                 [&] { return "object " + std::to_string(a); });
    for (int b = 0; b < E.size(); ++b) {
      auto const &hab = E.hom(a, b);
      for (auto const &t : sample_tuples({hab.total_dim()}, kExhaustiveBudget,
                                         mix_seed(seed, {1, std::size_t(a), std::size_t(b)}))) {
        SparseVec f = SparseVec::unit(t[0]);
        bool ok = E.compose(a, b, b, E.identity(b), f) == f && E.compose(a, a, b, f, E.identity(a)) == f;
        unit.record(ok, [&] { return "objects " + tuple_string({std::size_t(a), std::size_t(b)}) +
                                     " basis " + std::to_string(t[0]); });
      }
    }
  }

  Checker leibniz("composition is a chain map");
  for (auto const &o : object_tuples(n, 3, mix_seed(seed, {2}), 512)) {
    int a = int(o[0]), b = int(o[1]), c = int(o[2]);
    auto const &hab = E.hom(a, b);
    auto const &hbc = E.hom(b, c);
    auto const &hac = E.hom(a, c);
    for (auto const &t : sample_tuples({hbc.total_dim(), hab.total_dim()}, 256,
                                       mix_seed(seed, {3, o[0], o[1], o[2]}))) {
      SparseVec g = SparseVec::unit(t[0]), f = SparseVec::unit(t[1]);
      int dg = degree_of_basis(hbc, t[0]);
      SparseVec lhs = boundary(hac, E.compose(a, b, c, g, f));
      SparseVec rhs = E.compose(a, b, c, boundary(hbc, g), f) +
                      E.compose(a, b, c, g, boundary(hab, f)).scaled(koszul(dg, 1));
      leibniz.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  Checker assoc("associativity");
  for (auto const &o : object_tuples(n, 4, mix_seed(seed, {4}), 512)) {
    int a = int(o[0]), b = int(o[1]), c = int(o[2]), d = int(o[3]);
    for (auto const &t : sample_tuples({E.hom(c, d).total_dim(), E.hom(b, c).total_dim(),
                                        E.hom(a, b).total_dim()},
                                       64, mix_seed(seed, {5, o[0], o[1], o[2], o[3]}))) {
      SparseVec h = SparseVec::unit(t[0]), g = SparseVec::unit(t[1]), f = SparseVec::unit(t[2]);
      SparseVec lhs = E.compose(a, b, d, E.compose(b, c, d, h, g), f);
      SparseVec rhs = E.compose(a, c, d, h, E.compose(a, b, c, g, f));
      assoc.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  report.checks = {ident.result, unit.result, leibniz.result, assoc.result};
  return report;
}

CategoryPtr chain_complex_category(std::vector<ChainComplex> const &objects)
{
  std::size_t n = objects.size();
  auto bases = std::make_shared<std::vector<HomBasis>>();
  std::vector<ChainComplex> homs;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("X" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      bases->emplace_back(objects[a], objects[b]);
      homs.push_back(bases->back().complex());
    }
  }
  std::vector<SparseVec> ids;
  for (std::size_t a = 0; a < n; ++a) {
    auto const &B = (*bases)[a * n + a];
    std::vector<SparseVec::Entry> e;
    auto const &X = objects[a];
    for (int k = X.lo(); k <= X.hi(); ++k)
      for (std::size_t i = 0; i < X.dim(k); ++i)
        e.emplace_back(B.encode({0, k, i, i}), 1);
    ids.push_back(SparseVec::from_unsorted(std::move(e)));
  }
  auto compose = [bases, n](int a, int b, int c, std::size_t g, std::size_t f) {
    auto const &yz = (*bases)[std::size_t(b) * n + std::size_t(c)];
    auto const &xy = (*bases)[std::size_t(a) * n + std::size_t(b)];
    auto const &xz = (*bases)[std::size_t(a) * n + std::size_t(c)];
    return compose_units(yz, xy, xz, g, f);
  };
  return std::make_shared<DGCategory const>(std::move(labels), std::move(homs), compose, std::move(ids));
}

// Functors --------------------------------------------------------------------

ChainMap const &EnrichedFunctor::on_hom(int a, int b) const
{
  return maps.at(static_cast<std::size_t>(a) * static_cast<std::size_t>(source->size()) +
                 static_cast<std::size_t>(b));
}

SparseVec EnrichedFunctor::apply(int a, int b, SparseVec const &f) const
{
  return on_hom(a, b).apply(f);
}

EnrichedFunctor identity_functor(CategoryPtr const &E)
{
  EnrichedFunctor F{E, E, {}, {}};
  for (int a = 0; a < E->size(); ++a) {
    F.object_map.push_back(a);
    for (int b = 0; b < E->size(); ++b)
      F.maps.push_back(ChainMap::identity(E->hom(a, b)));
  }
  return F;
}

Report check_functor(EnrichedFunctor const &F, std::uint64_t seed)
{
  Report report;
  DGCategory const &E = *F.source;
  DGCategory const &D = *F.target;
  std::size_t n = static_cast<std::size_t>(E.size());

  Checker shape("functor data has the right shape");
  shape.record(F.object_map.size() == n && F.maps.size() == n * n, [] { return std::string("sizes"); });
  if (!shape.result.passed) {
    report.checks = {shape.result};
    return report;
  }
  for (int a = 0; a < E.size(); ++a) {
    int fa = F.object_map[std::size_t(a)];
    shape.record(fa >= 0 && fa < D.size(), [&] { return "object " + std::to_string(a); });
    if (!shape.result.passed)
      break;
    for (int b = 0; b < E.size(); ++b) {
      int fb = F.object_map[std::size_t(b)];
      if (fb < 0 || fb >= D.size())
        continue;
      auto const &m = F.on_hom(a, b);
      shape.record(m.source().dims() == E.hom(a, b).dims() && m.target().dims() == D.hom(fa, fb).dims() &&
                       m.is_chain_map(),
                   [&] { return "hom " + tuple_string({std::size_t(a), std::size_t(b)}); });
    }
  }
  if (!shape.result.passed) {
    report.checks = {shape.result};
    return report;
  }

  Checker ids("preserves identities");
  for (int a = 0; a < E.size(); ++a) {
    int fa = F.object_map[std::size_t(a)];
    ids.record(F.apply(a, a, E.identity(a)) == D.identity(fa), [&] { return "object " + std::to_string(a); });
  }

  Checker comp("preserves composition");
  for (auto const &o : object_tuples(n, 3, mix_seed(seed, {6}), 512)) {
    int a = int(o[0]), b = int(o[1]), c = int(o[2]);
    int fa = F.object_map[o[0]], fb = F.object_map[o[1]], fc = F.object_map[o[2]];
    for (auto const &t : sample_tuples({E.hom(b, c).total_dim(), E.hom(a, b).total_dim()}, 64,
                                       mix_seed(seed, {7, o[0], o[1], o[2]}))) {
      SparseVec g = SparseVec::unit(t[0]), f = SparseVec::unit(t[1]);
      SparseVec lhs = F.apply(a, c, E.compose(a, b, c, g, f));
      SparseVec rhs = D.compose(fa, fb, fc, F.apply(b, c, g), F.apply(a, b, f));
      comp.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }
  report.checks = {shape.result, ids.result, comp.result};
  return report;
}

bool is_quasi_isomorphism(EnrichedFunctor const &F, std::uint64_t seed)
{
  Report r = check_functor(F, seed);
  if (!r.passed())
    throw InvalidInputError("not an enriched functor: " + r.first_failure());
  int n = F.source->size();
  if (F.target->size() != n)
    return false;
  std::vector<bool> hit(std::size_t(n), false);
  for (int a : F.object_map) {
    if (hit[std::size_t(a)])
      return false;
    hit[std::size_t(a)] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_homology_isomorphism(F.on_hom(a, b)))
        return false;
  return true;
}

// Homology category -----------------------------------------------------------

namespace {

// Cycle in X representing basis vector b of Homology(X).as_complex().
SparseVec homology_representative(Homology const &h, ChainComplex const &hc, std::size_t b)
{
  int n = hc.degree_of(b);
  auto const &deg = h.at(n);
  return from_degree(h.complex(), deg.representatives.column(b - hc.offset(n)), n);
}

// Homology class of a cycle of X, in the global basis of Homology(X).as_complex().
SparseVec homology_class(Homology const &h, ChainComplex const &hc, SparseVec const &cycle)
{
  std::vector<SparseVec::Entry> out;
  ChainComplex const &x = h.complex();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    SparseVec part = degree_part(x, cycle, n);
    if (part.empty() || h.at(n).rep.dim() == 0)
      continue;
    for (auto &e : from_degree(hc, h.at(n).project(part), n))
      out.push_back(std::move(e));
  }
  return SparseVec::from_unsorted(std::move(out));
}

}  // namespace

CategoryPtr homology_category(CategoryPtr const &E)
{
  int n = E->size();
  auto hom = std::make_shared<std::vector<std::pair<Homology, ChainComplex>>>();
  std::vector<ChainComplex> homs;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(E->label(a));
    for (int b = 0; b < n; ++b) {
      Homology h(E->hom(a, b));
      ChainComplex hc = h.as_complex();
      homs.push_back(hc);
      hom->emplace_back(std::move(h), std::move(hc));
    }
  }
  auto at = [hom, n](int a, int b) -> auto const & { return (*hom)[std::size_t(a * n + b)]; };
  std::vector<SparseVec> ids;
  for (int a = 0; a < n; ++a)
    ids.push_back(homology_class(at(a, a).first, at(a, a).second, E->identity(a)));
  auto compose = [E, at](int a, int b, int c, std::size_t g, std::size_t f) {
    auto const &[hbc, cbc] = at(b, c);
    auto const &[hab, cab] = at(a, b);
    auto const &[hac, cac] = at(a, c);
    SparseVec prod = E->compose(a, b, c, homology_representative(hbc, cbc, g),
                                homology_representative(hab, cab, f));
    return homology_class(hac, cac, prod);
  };
  return std::make_shared<DGCategory const>(std::move(labels), std::move(homs), compose, std::move(ids));
}

ConnectiveZigZag connective_cover_category(CategoryPtr const &E)
{
  int n = E->size();
  struct Pair
  {
    Truncation cover;
    Homology homology;
    ChainComplex h0;
    ChainMap quotient;
  };
  auto data = std::make_shared<std::vector<Pair>>();
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(E->label(a));
    for (int b = 0; b < n; ++b) {
      ChainComplex const &x = E->hom(a, b);
      Truncation cover = connective_cover(x);
      Truncation h0 = h0_truncation(x);
      // rebase the quotient onto this cover so both functors share a source
      std::vector<Matrix> comps;
      for (int d = cover.complex.lo(); d <= cover.complex.hi(); ++d)
        comps.push_back(h0.map.component(d));
      ChainMap q(cover.complex, h0.complex, std::move(comps), false);
      data->push_back(Pair{cover, Homology(x), h0.complex, std::move(q)});
    }
  }
  auto at = [data, n](int a, int b) -> Pair const & { return (*data)[std::size_t(a * n + b)]; };

  // C_0 E
  auto restrict_to_cover = [](Truncation const &t, SparseVec const &v) {
    ChainComplex const &c = t.complex;
    ChainComplex const &x = t.map.target();
    std::vector<SparseVec::Entry> out;
    for (int d = c.lo(); d <= c.hi(); ++d) {
      SparseVec part = degree_part(x, v, d);
      if (part.empty())
        continue;
      if (d == 0 && !t.map.component(0).is_identity()) {
        auto sol = solve(t.map.component(0), part);
        if (!sol)
          throw std::logic_error("composite of connective maps left the cover");
        part = *sol;
      }
      for (auto &e : from_degree(c, part, d))
        out.push_back(std::move(e));
    }
    return SparseVec::from_unsorted(std::move(out));
  };
  std::vector<ChainComplex> cover_homs;
  std::vector<SparseVec> cover_ids;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cover_homs.push_back(at(a, b).cover.complex);
  for (int a = 0; a < n; ++a)
    cover_ids.push_back(restrict_to_cover(at(a, a).cover, E->identity(a)));
  auto cover_compose = [E, at, restrict_to_cover](int a, int b, int c, std::size_t g, std::size_t f) {
    SparseVec gv = at(b, c).cover.map.apply(SparseVec::unit(g));
    SparseVec fv = at(a, b).cover.map.apply(SparseVec::unit(f));
    return restrict_to_cover(at(a, c).cover, E->compose(a, b, c, gv, fv));
  };
  auto cover = std::make_shared<DGCategory const>(labels, std::move(cover_homs), cover_compose,
                                                  std::move(cover_ids));

  // H_0 E
  std::vector<ChainComplex> h0_homs;
  std::vector<SparseVec> h0_ids;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      h0_homs.push_back(at(a, b).h0);
  auto h0_class = [](Pair const &p, SparseVec const &v) -> SparseVec {
    if (p.h0.empty())
      return {};
    SparseVec part = degree_part(p.homology.complex(), v, 0);
    if (part.empty())
      return {};
    return p.homology.at(0).project(part);
  };
  auto h0_rep = [](Pair const &p, std::size_t b) {
    return from_degree(p.homology.complex(), p.homology.at(0).representatives.column(b), 0);
  };
  for (int a = 0; a < n; ++a)
    h0_ids.push_back(h0_class(at(a, a), E->identity(a)));
  auto h0_compose = [E, at, h0_class, h0_rep](int a, int b, int c, std::size_t g, std::size_t f) {
    return h0_class(at(a, c), E->compose(a, b, c, h0_rep(at(b, c), g), h0_rep(at(a, b), f)));
  };
  auto h0 = std::make_shared<DGCategory const>(labels, std::move(h0_homs), h0_compose, std::move(h0_ids));

  ConnectiveZigZag z{cover, h0, {cover, E, {}, {}}, {cover, h0, {}, {}}};
  for (int a = 0; a < n; ++a) {
    z.inclusion.object_map.push_back(a);
    z.to_homology.object_map.push_back(a);
    for (int b = 0; b < n; ++b) {
      z.inclusion.maps.push_back(at(a, b).cover.map);
      z.to_homology.maps.push_back(at(a, b).quotient);
    }
  }
  return z;
}

// Monoidal structure ----------------------------------------------------------

SparseVec MonoidalDGStructure::tensor(int a, int b, int c, int d, SparseVec const &f,
                                      SparseVec const &g) const
{
  std::vector<SparseVec::Entry> out;
  for (auto const &[fi, fc] : f)
    for (auto const &[gi, gc] : g) {
      Rational coeff = fc * gc;
      for (auto const &[i, x] : tensor_basis(a, b, c, d, fi, gi))
        out.emplace_back(i, coeff * x);
    }
  return SparseVec::from_unsorted(std::move(out));
}

Report check_monoidal(DGCategory const &E, MonoidalDGStructure const &M, std::uint64_t seed)
{
  std::size_t n = static_cast<std::size_t>(E.size());
  auto T = [&](std::size_t a, std::size_t b) { return M.tensor_objects(int(a), int(b)); };
  auto dimh = [&](std::size_t a, std::size_t b) { return E.hom(int(a), int(b)).total_dim(); };
  auto deg = [&](std::size_t a, std::size_t b, std::size_t i) { return E.hom(int(a), int(b)).degree_of(i); };
  std::size_t const per_tuple = 8;

  Checker chain("structure maps are chain maps");
  for (auto const &o : object_tuples(n, 4, mix_seed(seed, {10}), 256)) {
    auto ab = T(o[0], o[1]), cd = T(o[2], o[3]);
    if (!ab || !cd)
      continue;
    for (auto const &t : sample_tuples({dimh(o[0], o[2]), dimh(o[1], o[3])}, per_tuple,
                                       mix_seed(seed, {11, o[0], o[1], o[2], o[3]}))) {
      int a = int(o[0]), b = int(o[1]), c = int(o[2]), d = int(o[3]);
      SparseVec f = SparseVec::unit(t[0]), g = SparseVec::unit(t[1]);
      auto const &hac = E.hom(a, c);
      auto const &hbd = E.hom(b, d);
      SparseVec lhs = boundary(E.hom(*ab, *cd), M.tensor(a, b, c, d, f, g));
      SparseVec rhs = M.tensor(a, b, c, d, boundary(hac, f), g) +
                      M.tensor(a, b, c, d, f, boundary(hbd, g)).scaled(koszul(deg(o[0], o[2], t[0]), 1));
      chain.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  Checker interchange("interchange with composition");
  for (auto const &o : object_tuples(n, 6, mix_seed(seed, {12}), 256)) {
    // f: a->c, f2: c->e, g: b->d, g2: d->h
    auto ab = T(o[0], o[1]), cd = T(o[2], o[3]), eh = T(o[4], o[5]);
    if (!ab || !cd || !eh)
      continue;
    int a = int(o[0]), b = int(o[1]), c = int(o[2]), d = int(o[3]), e = int(o[4]), h = int(o[5]);
    for (auto const &t : sample_tuples({dimh(o[0], o[2]), dimh(o[2], o[4]), dimh(o[1], o[3]), dimh(o[3], o[5])},
                                       per_tuple, mix_seed(seed, {13, o[0], o[1], o[2], o[3], o[4], o[5]}))) {
      SparseVec f = SparseVec::unit(t[0]), f2 = SparseVec::unit(t[1]);
      SparseVec g = SparseVec::unit(t[2]), g2 = SparseVec::unit(t[3]);
      SparseVec lhs = M.tensor(a, b, e, h, E.compose(a, c, e, f2, f), E.compose(b, d, h, g2, g));
      SparseVec rhs = E.compose(*ab, *cd, *eh, M.tensor(c, d, e, h, f2, g2), M.tensor(a, b, c, d, f, g))
                          .scaled(koszul(deg(o[1], o[3], t[2]), deg(o[2], o[4], t[1])));
      interchange.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  Checker ids("tensor of identities");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = T(a, b);
      if (!ab)
        continue;
      SparseVec lhs = M.tensor(int(a), int(b), int(a), int(b), E.identity(int(a)), E.identity(int(b)));
      ids.record(lhs == E.identity(*ab), [&] { return "objects " + tuple_string({a, b}); });
    }

  Checker unit("unit object is a strict unit");
  std::size_t I = std::size_t(M.unit);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      bool in_range = T(I, a) == int(a) && T(a, I) == int(a) && T(I, c) == int(c) && T(c, I) == int(c);
      unit.record(in_range, [&] { return "objects " + tuple_string({a, c}) + " not fixed by the unit"; });
      if (!in_range)
        continue;
      for (auto const &t : sample_tuples({dimh(a, c)}, per_tuple, mix_seed(seed, {14, a, c}))) {
        SparseVec f = SparseVec::unit(t[0]);
        bool ok = M.tensor(M.unit, int(a), M.unit, int(c), E.identity(M.unit), f) == f &&
                  M.tensor(int(a), M.unit, int(c), M.unit, f, E.identity(M.unit)) == f;
        unit.record(ok, [&] { return "objects " + tuple_string({a, c}) + " basis " + tuple_string(t); });
      }
    }

  Checker assoc("associativity");
  for (auto const &o : object_tuples(n, 6, mix_seed(seed, {15}), 256)) {
    // f: a->d, g: b->e, h: c->k
    auto ab = T(o[0], o[1]), de = T(o[3], o[4]);
    auto bc = T(o[1], o[2]), ek = T(o[4], o[5]);
    if (!ab || !de || !bc || !ek)
      continue;
    auto ab_c = T(std::size_t(*ab), o[2]), a_bc = T(o[0], std::size_t(*bc));
    auto de_k = T(std::size_t(*de), o[5]), d_ek = T(o[3], std::size_t(*ek));
    if (!ab_c || !a_bc || !de_k || !d_ek)
      continue;
    if (*ab_c != *a_bc || *de_k != *d_ek) {
      assoc.record(false, [&] { return "objects " + tuple_string(o) + " not strictly associative"; });
      continue;
    }
    int a = int(o[0]), b = int(o[1]), c = int(o[2]), d = int(o[3]), e = int(o[4]), k = int(o[5]);
    for (auto const &t : sample_tuples({dimh(o[0], o[3]), dimh(o[1], o[4]), dimh(o[2], o[5])}, per_tuple,
                                       mix_seed(seed, {16, o[0], o[1], o[2], o[3], o[4], o[5]}))) {
      SparseVec f = SparseVec::unit(t[0]), g = SparseVec::unit(t[1]), h = SparseVec::unit(t[2]);
      SparseVec lhs = M.tensor(*ab, c, *de, k, M.tensor(a, b, d, e, f, g), h);
      SparseVec rhs = M.tensor(a, *bc, d, *ek, f, M.tensor(b, c, e, k, g, h));
      assoc.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
  }

  Checker natural("symmetry is natural");
  Checker involution("symmetry is an involution");
  for (auto const &o : object_tuples(n, 4, mix_seed(seed, {17}), 256)) {
    // f: a->c, g: b->d
    auto ab = T(o[0], o[1]), ba = T(o[1], o[0]), cd = T(o[2], o[3]), dc = T(o[3], o[2]);
    if (!ab || !ba || !cd || !dc)
      continue;
    int a = int(o[0]), b = int(o[1]), c = int(o[2]), d = int(o[3]);
    SparseVec tab = M.symmetry(a, b), tcd = M.symmetry(c, d);
    for (auto const &t : sample_tuples({dimh(o[0], o[2]), dimh(o[1], o[3])}, per_tuple,
                                       mix_seed(seed, {18, o[0], o[1], o[2], o[3]}))) {
      SparseVec f = SparseVec::unit(t[0]), g = SparseVec::unit(t[1]);
      SparseVec lhs = E.compose(*ab, *cd, *dc, tcd, M.tensor(a, b, c, d, f, g));
      SparseVec rhs = E.compose(*ab, *ba, *dc, M.tensor(b, a, d, c, g, f), tab)
                          .scaled(koszul(deg(o[0], o[2], t[0]), deg(o[1], o[3], t[1])));
      natural.record(lhs == rhs, [&] { return "objects " + tuple_string(o) + " basis " + tuple_string(t); });
    }
    if (c == a && d == b)
      involution.record(E.compose(*ab, *ba, *ab, M.symmetry(b, a), tab) == E.identity(*ab),
                        [&] { return "objects " + tuple_string({o[0], o[1]}); });
  }

  Checker hexagon("hexagon");
  for (auto const &o : object_tuples(n, 3, mix_seed(seed, {19}), 256)) {
    int a = int(o[0]), b = int(o[1]), c = int(o[2]);
    auto ab = T(o[0], o[1]), ba = T(o[1], o[0]), bc = T(o[1], o[2]), ac = T(o[0], o[2]),
         ca = T(o[2], o[0]);
    if (!ab || !ba || !bc || !ac || !ca)
      continue;
    auto abc = T(std::size_t(*ab), o[2]), a_bc = T(o[0], std::size_t(*bc));
    auto bca = T(std::size_t(*bc), o[0]), b_ca = T(o[1], std::size_t(*ca));
    auto bac = T(std::size_t(*ba), o[2]), b_ac = T(o[1], std::size_t(*ac));
    if (!abc || !a_bc || !bca || !b_ca || !bac || !b_ac)
      continue;
    if (*abc != *a_bc || *bca != *b_ca || *bac != *b_ac) {
      hexagon.record(false, [&] { return "objects " + tuple_string(o) + " not strictly associative"; });
      continue;
    }
    // τ_{a, b⊗c} = (id_b ⊗ τ_{a,c}) ∘ (τ_{a,b} ⊗ id_c)
    SparseVec lhs = M.symmetry(a, *bc);
    SparseVec first = M.tensor(*ab, c, *ba, c, M.symmetry(a, b), E.identity(c));
    SparseVec second = M.tensor(b, *ac, b, *ca, E.identity(b), M.symmetry(a, c));
    SparseVec rhs = E.compose(*abc, *bac, *bca, second, first);
    hexagon.record(lhs == rhs, [&] { return "objects " + tuple_string(o); });
  }

  Report report;
  report.checks = {chain.result, interchange.result, ids.result, unit.result,
                   assoc.result, natural.result, involution.result, hexagon.result};
  return report;
}

}  // namespace eqmodel
