#include "eqmodel/verify.hpp"

#include "check_util.hpp"
#include "eqmodel/random_objects.hpp"

namespace eqmodel {

using detail::Checker;

namespace {

SuiteResult suite(std::string name, std::vector<CheckResult> checks)
{
  SuiteResult s{std::move(name), {}};
  s.report.checks = std::move(checks);
  return s;
}

void absorb(Checker &into, Report const &r, std::string const &where)
{
  into.record(r.passed(), [&] { return where + ": " + r.first_failure(); });
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

std::string cls_string(std::size_t c)
{
  return "class " + std::to_string(c);
}

RandomComplexOptions small_options()
{
  RandomComplexOptions o;
  o.max_dim = 4;
  o.max_window = 3;
  return o;
}

// Runs `body`, turning a library error into a failed case.
template <class F>
void guarded(Checker &c, std::string const &where, F &&body)
{
  try {
    body();
  } catch (std::exception const &e) {
    std::string msg = e.what();
    c.record(false, [&] { return where + ": " + msg; });
  }
}

std::size_t cycle_dimension(ChainComplex const &x, int n)
{
  if (x.dim(n) == 0)
    return 0;
  return x.dim(n) - rank(x.differential(n));
}

}  // namespace

SuiteResult burnside_splitting_suite(GroupPtr const &G)
{
  auto ring = make_burnside_ring(G);
  Checker idem("e_H^2 = e_H");
  Checker orth("e_H e_K = 0 for (H) != (K)");
  Checker sum("sum of idempotents is [G/G]");
  std::vector<BurnsideElement> e;
  for (std::size_t c = 0; c < ring->rank(); ++c)
    e.push_back(idempotent(ring, c));
  BurnsideElement total = BurnsideElement::zero(ring);
  for (std::size_t c = 0; c < e.size(); ++c) {
    total = total + e[c];
    idem.record(burnside_multiply(e[c], e[c]) == e[c], [&] { return cls_string(c); });
    for (std::size_t d = 0; d < e.size(); ++d)
      if (c != d)
        orth.record(burnside_multiply(e[c], e[d]).is_zero(), [&] { return "classes " + tuple_string({c, d}); });
  }
  sum.record(total == BurnsideElement::unit(ring), [] { return std::string("sum differs from the unit"); });
  return suite("burnside splitting", {idem.result, orth.result, sum.result});
}

SuiteResult restriction_vanishing_suite(GroupPtr const &G)
{
  auto ring = make_burnside_ring(G);
  auto const &table = ring->classes();
  Checker c("restriction of e_H to strictly subconjugate K vanishes");
  for (std::size_t h = 0; h < table.size(); ++h) {
    auto eh = idempotent(ring, h);
    for (auto const &K : all_subgroups(G))
      if (is_subconjugate(G, K, table.representative(h), true))
        c.record(restriction(K, eh).is_zero(), [&] {
          return cls_string(h) + " restricted to a subgroup of order " + std::to_string(K.members.size());
        });
  }
  return suite("restriction vanishing", {c.result});
}

SuiteResult family_idempotent_suite(GroupPtr const &G)
{
  auto ring = make_burnside_ring(G);
  auto const &table = ring->classes();
  Checker c("family idempotent is the sum over the family");
  for (std::size_t h = 0; h < table.size(); ++h) {
    auto const &H = table.representative(h);
    BurnsideElement sum = BurnsideElement::zero(ring);
    for (auto k : family_below(table, H, false))
      sum = sum + idempotent(ring, k);
    c.record(family_idempotent(ring, H, false) == sum, [&] { return cls_string(h); });
  }
  return suite("family idempotents", {c.result});
}

SuiteResult pushout_product_suite(GroupPtr const &G)
{
  Checker dim("pushout-product cokernel has dimension |G|^2");
  Checker free_rank("pushout-product cokernel is free of rank |G|");
  std::size_t g = G->order();
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {1, 2}}) {
    std::string where = "cofibrations " + tuple_string({std::size_t(a), std::size_t(b)});
    guarded(dim, where, [&] {
      ChainMap pp = pushout_product(generating_cofibration(G, a), generating_cofibration(G, b));
      ChainComplex q = cokernel(pp).complex;
      dim.record(q.total_dim() == g * g, [&] { return where + ": dimension " + std::to_string(q.total_dim()); });
      std::size_t r = 0;
      for (int n = q.lo(); n <= q.hi(); ++n)
        if (q.dim(n) > 0)
          r += rank(average_projector(q.term(n)));
      free_rank.record(r == g, [&] { return where + ": projector rank " + std::to_string(r); });
    });
  }
  return suite("pushout-product cokernel", {dim.result, free_rank.result});
}

SuiteResult fixed_point_homology_suite(GroupPtr const &G, VerifyOptions const &opt)
{
  Checker c("H_*(X^G) = (H_*X)^G");
  for (std::size_t k = 0; k < opt.random_complexes; ++k) {
    Rng rng(mix_seed(opt.seed, {101, k}));
    ChainComplex X = random_complex(G, rng);
    GradedDims lhs = homology_dims(fixed_points(X));
    GradedDims rhs;
    Homology H(X);
    for (auto const &[n, d] : H.dims()) {
      std::size_t f = fixed_dimension(H.at(n).rep);
      if (f > 0)
        rhs[n] = f;
    }
    c.record(lhs == rhs, [&] { return "random complex " + std::to_string(k); });
  }
  return suite("fixed points commute with homology", {c.result});
}

SuiteResult generator_lemma_suite(GroupPtr const &G, VerifyOptions const &opt)
{
  Checker c("[QG, X]_* = H_*(X)");
  ChainComplex S = sphere(G, 0);
  for (std::size_t k = 0; k < opt.random_complexes; ++k) {
    Rng rng(mix_seed(opt.seed, {102, k}));
    ChainComplex X = random_complex(G, rng);
    c.record(homotopy_hom(S, X) == homology_dims(X), [&] { return "random complex " + std::to_string(k); });
  }
  return suite("generator lemma", {c.result});
}

SuiteResult formality_suite(AlgebraicModel const &model, VerifyOptions const &opt)
{
  Checker inc("C_0 E_a -> E_a is a quasi-isomorphism");
  Checker proj("C_0 E_a -> H_0 E_a is a quasi-isomorphism");
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    guarded(inc, cls_string(c), [&] {
      auto zz = connective_cover_category(model.factors[c].ea.category);
      inc.record(is_quasi_isomorphism(zz.inclusion, mix_seed(opt.seed, {103, c})), [&] { return cls_string(c); });
      proj.record(is_quasi_isomorphism(zz.to_homology, mix_seed(opt.seed, {104, c})), [&] { return cls_string(c); });
    });
  }
  return suite("formality zig-zag", {inc.result, proj.result});
}

SuiteResult formality_negative_control()
{
  Checker c("homology in degree -1 breaks the zig-zag");
  guarded(c, "negative control", [&] {
    ChainComplex X = ChainComplex::of_vector_spaces(0, {1, 1}, {Matrix(1, 1)});
    auto E = chain_complex_category({X});
    auto zz = connective_cover_category(E);
    c.record(!is_quasi_isomorphism(zz.inclusion), [] { return std::string("inclusion reported as quasi-isomorphism"); });
  });
  return suite("formality negative control", {c.result});
}

SuiteResult ea_structure_suite(AlgebraicModel const &model, VerifyOptions const &opt)
{
  Checker cat("E_a is a DG category");
  Checker mon("E_a is symmetric monoidal");
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &ea = model.factors[c].ea;
    absorb(cat, check_category(*ea.category, mix_seed(opt.seed, {105, c})), cls_string(c));
    absorb(mon, check_monoidal(*ea.category, ea.monoidal, mix_seed(opt.seed, {106, c})), cls_string(c));
  }
  return suite("E_a structure", {cat.result, mon.result});
}

SuiteResult endomorphism_suite(AlgebraicModel const &model)
{
  Checker c("End(generator) = QW");
  for (std::size_t k = 0; k < model.factors.size(); ++k) {
    auto r = endomorphism_check(model, k);
    c.record(r.passed(), [&] {
      return cls_string(k) + ": dim " + std::to_string(r.dimension) + ", |W| " + std::to_string(r.weyl_order) +
             (r.detail.empty() ? "" : ", " + r.detail);
    });
  }
  return suite("endomorphism identification", {c.result});
}

SuiteResult model_suite(AlgebraicModel const &model)
{
  Report r = check_model(model);
  Checker unit("degree-0 endomorphisms of the unit total sum |W_GH|");
  std::size_t expect = 0;
  for (auto const &f : model.factors)
    expect += f.weyl->order();
  ModelObject U = model_unit(model);
  auto a = homotopy_classes(model, U, U);
  auto b = homotopy_classes_via_hom_complex(model, U, U);
  unit.record(a.total == GradedDims{{0, expect}} && b.total == a.total,
              [&] { return "expected " + std::to_string(expect) + " in degree 0"; });
  Checker single("unit at one class has |W| endomorphisms there only");
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    ModelObject X = unit_at(model, c);
    auto h = homotopy_classes(model, X, X);
    bool ok = h.total == GradedDims{{0, model.factors[c].weyl->order()}} && h.per_class[c] == h.total;
    single.record(ok, [&] { return cls_string(c); });
  }
  auto checks = r.checks;
  checks.push_back(unit.result);
  checks.push_back(single.result);
  return suite("model structure", std::move(checks));
}

SuiteResult adjunction_suite(AlgebraicModel const &model, VerifyOptions const &opt)
{
  Checker co("counit is a homology isomorphism");
  Checker un("unit on free modules is an isomorphism");
  Checker mon("(M□N)⊗G = (M⊗G)⊗(N⊗G)");
  RandomComplexOptions small = small_options();
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &f = model.factors[c];
    CategoryPtr E = f.ea.category;
    for (std::size_t k = 0; k < opt.adjunction_complexes; ++k) {
      std::string where = cls_string(c) + " complex " + std::to_string(k);
      guarded(co, where, [&] {
        Rng rng(mix_seed(opt.seed, {107, c, k}));
        ChainComplex X = random_complex(f.weyl, rng);
        co.record(is_homology_isomorphism(counit(X, E)), [&] { return where; });
      });
    }
    for (int a = 0; a <= model.n_max; ++a) {
      std::string where = cls_string(c) + " free module " + std::to_string(a);
      guarded(un, where, [&] {
        auto F = std::make_shared<DGModule const>(free_module(E, a));
        ModuleMap u = unit(F);
        bool ok = true;
        for (auto const &comp : u.components)
          ok = ok && is_isomorphism(comp);
        Report nat = check_module_map(u, mix_seed(opt.seed, {108, c, std::size_t(a)}));
        un.record(ok && nat.passed(), [&] { return where + (ok ? ": " + nat.first_failure() : ""); });
      });
    }
    for (std::size_t k = 0; k < opt.monoidal_pairs; ++k) {
      std::string where = cls_string(c) + " pair " + std::to_string(k);
      guarded(mon, where, [&] {
        Rng rng(mix_seed(opt.seed, {109, c, k}));
        DGModule M = random_ea_module(E, rng, small);
        DGModule N = random_ea_module(E, rng, small);
        ReducedBox box(M, N);
        Report r = check_monoidality(box, mix_seed(opt.seed, {110, c, k}));
        GradedDims lhs = box.at(1).dims();
        GradedDims rhs = tensor(tensor_with_generators(M), tensor_with_generators(N)).dims();
        mon.record(r.passed() && lhs == rhs, [&] { return where + ": " + (r.passed() ? "dims differ" : r.first_failure()); });
      });
    }
  }
  return suite("generator adjunction", {co.result, un.result, mon.result});
}

SuiteResult module_suite(AlgebraicModel const &model, VerifyOptions const &opt)
{
  Checker laws("module laws");
  Checker free_box("F_a □ F_b = F_{a+b}");
  Checker unit_box("F_0 □ M = M");
  Checker reduction("coends through the generating object agree with full coends");
  Checker generators("M⊗G of F_i is (QW)^{⊗i}");
  Checker scalars("extension of scalars along the zig-zag");
  Checker counting("module maps into underhom count equivariant chain maps");
  RandomComplexOptions small = small_options();
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &f = model.factors[c];
    std::size_t w = f.weyl->order();
    if (w > 6)
      continue;
    CategoryPtr E = f.ea.category;
    auto const &S = *f.ea.structure;
    int n = model.n_max;
    std::vector<int> all;
    for (int a = 0; a <= n; ++a)
      all.push_back(a);

    for (int a = 0; a <= n; ++a) {
      std::string where = cls_string(c) + " F_" + std::to_string(a);
      guarded(laws, where, [&] {
        absorb(laws, check_module(free_module(E, a), mix_seed(opt.seed, {111, c, std::size_t(a)})), where);
      });
      guarded(generators, where, [&] {
        ChainComplex T = tensor_with_generators(free_module(E, a));
        ChainComplex V = ChainComplex::concentrated(S.object_rep(a), 0);
        // f ↦ f(e)
        std::vector<SparseVec> cols;
        for (std::size_t b = 0; b < S.hom_dim(1, a); ++b)
          cols.push_back(S.apply(1, a, b, FiniteGroup::kIdentity));
        ChainMap ev(T, V, {Matrix::from_columns(S.points(a), std::move(cols))});
        generators.record(is_isomorphism(ev), [&] { return where; });
      });
    }

    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        std::string where = cls_string(c) + " F_" + std::to_string(a) + " □ F_" + std::to_string(b);
        guarded(free_box, where, [&] {
          ReducedBox box(free_module(E, a), free_module(E, b));
          bool ok = true;
          for (int x = 0; x <= n; ++x)
            ok = ok && box.at(x).dims() == E->hom(x, a + b).dims();
          free_box.record(ok, [&] { return where; });
        });
      }

    for (std::size_t k = 0; k < 3; ++k) {
      std::string where = cls_string(c) + " module " + std::to_string(k);
      Rng rng(mix_seed(opt.seed, {112, c, k}));
      DGModule M = random_ea_module(E, rng, small);
      guarded(laws, where, [&] { absorb(laws, check_module(M, mix_seed(opt.seed, {113, c, k})), where); });
      guarded(unit_box, where, [&] {
        ReducedBox box(free_module(E, 0), M);
        ModuleMap collapse = unit_collapse(box);
        bool ok = true;
        for (auto const &comp : collapse.components)
          ok = ok && is_isomorphism(comp);
        Report nat = check_module_map(collapse, mix_seed(opt.seed, {114, c, k}));
        unit_box.record(ok && nat.passed(), [&] { return where + (ok ? ": " + nat.first_failure() : ""); });
        absorb(laws, check_module(box.module(), mix_seed(opt.seed, {115, c, k})), where + " box");
      });
      guarded(reduction, where, [&] {
        std::vector<int> objs = (w <= 3) ? all : std::vector<int>{0, 1};
        absorb(reduction, check_generator_reduction(M, objs), where);
        if (w <= 3) {
          DGModule N = random_ea_module(E, rng, small);
          ReducedBox box(M, N);
          DGModule full = box_product_over(M, N, f.ea.monoidal, {0, 1});
          bool ok = true;
          for (int x = 0; x <= n; ++x)
            ok = ok && box.at(x).dims() == full.value(x).dims();
          reduction.record(ok, [&] { return where + ": box product dims"; });
        }
      });
      if (w <= 2)
        guarded(counting, where, [&] {
          ChainComplex X = random_complex(f.weyl, rng, small);
          DGModule U = underhom_generators(X, E);
          ChainComplex H = fixed_points(hom_complex(tensor_with_generators(M), X));
          std::size_t lhs = module_map_dimension(M, U);
          std::size_t rhs = cycle_dimension(H, 0);
          counting.record(lhs == rhs, [&] {
            return where + ": " + std::to_string(lhs) + " module maps vs " + std::to_string(rhs) + " chain maps";
          });
        });
    }

    if (w <= 2) {
      std::string where = cls_string(c);
      guarded(scalars, where, [&] {
        auto zz = connective_cover_category(E);
        for (int a = 0; a <= n; ++a) {
          auto F = std::make_shared<DGModule const>(free_module(zz.cover, a));
          scalars.record(is_weak_equivalence(extension_unit(zz.inclusion, F)),
                         [&] { return where + " along the inclusion, F_" + std::to_string(a); });
          scalars.record(is_weak_equivalence(extension_unit(zz.to_homology, F)),
                         [&] { return where + " along the projection, F_" + std::to_string(a); });
        }
      });
    }
  }
  return suite("modules and box product", {laws.result, free_box.result, unit_box.result, reduction.result,
                                           generators.result, scalars.result, counting.result});
}

SuiteResult coend_suite(VerifyOptions const &opt)
{
  Checker laws("random modules satisfy the module laws");
  Checker yoneda("co-Yoneda map is an isomorphism");
  Checker fubini("iterated coends agree in either order");
  for (std::size_t k = 0; k < opt.coend_modules; ++k) {
    std::string where = "random module " + std::to_string(k);
    guarded(yoneda, where, [&] {
      Rng rng(mix_seed(opt.seed, {116, k}));
      RandomCategory C = random_category(rng);
      DGModule G = random_module(C, rng);
      absorb(laws, check_module(G, mix_seed(opt.seed, {117, k})), where);
      for (int b = 0; b < C.category->size(); ++b) {
        Coend coend = coyoneda_coend(G, b);
        yoneda.record(is_isomorphism(coyoneda_map(G, b, coend)), [&] { return where + " object " + std::to_string(b); });
      }
      int x0 = std::uniform_int_distribution<int>(0, C.category->size() - 1)(rng);
      auto [first, second] = fubini_dims(G, x0);
      fubini.record(first == second && first == G.value(x0).dims(),
                    [&] { return where + " object " + std::to_string(x0); });
    });
  }
  return suite("co-Yoneda and Fubini", {laws.result, yoneda.result, fubini.result});
}

SuiteResult classification_suite(AlgebraicModel const &model, VerifyOptions const &opt)
{
  Checker c("homotopy classes agree with per-class homotopy_hom");
  RandomComplexOptions small = small_options();
  for (std::size_t k = 0; k < opt.model_pairs; ++k) {
    Rng rng(mix_seed(opt.seed, {118, k}));
    ModelObject X = random_model_object(model, rng, small);
    ModelObject Y = random_model_object(model, rng, small);
    auto a = homotopy_classes(model, X, Y);
    auto b = homotopy_classes_via_hom_complex(model, X, Y);
    bool ok = a.total == b.total && a.per_class == b.per_class;
    c.record(ok, [&] { return "random pair " + std::to_string(k); });
  }
  return suite("classification cross-check", {c.result});
}

std::vector<SuiteResult> run_verify(GroupPtr const &G, VerifyOptions const &opt)
{
  std::vector<SuiteResult> out;
  out.push_back(burnside_splitting_suite(G));
  out.push_back(restriction_vanishing_suite(G));
  out.push_back(family_idempotent_suite(G));
  out.push_back(pushout_product_suite(G));
  out.push_back(fixed_point_homology_suite(G, opt));
  out.push_back(generator_lemma_suite(G, opt));
  AlgebraicModel model = build_model(G, opt.n_max);
  out.push_back(model_suite(model));
  out.push_back(ea_structure_suite(model, opt));
  out.push_back(formality_suite(model, opt));
  out.push_back(formality_negative_control());
  out.push_back(endomorphism_suite(model));
  AlgebraicModel module_model = (opt.module_n_max == opt.n_max) ? model : build_model(G, opt.module_n_max);
  out.push_back(adjunction_suite(module_model, opt));
  out.push_back(module_suite(module_model, opt));
  out.push_back(coend_suite(opt));
  out.push_back(classification_suite(model, opt));
  return out;
}

}  // namespace eqmodel
