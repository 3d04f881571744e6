#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eqmodel/json_io.hpp"
#include "eqmodel/random_objects.hpp"
#include "eqmodel/sampling.hpp"
#include "eqmodel/verify.hpp"

using namespace eqmodel;

namespace {

struct Config
{
  std::string group;
  int n_max = 3;
  std::uint64_t seed = 0;
  std::string out;
  std::string x_path, y_path;
  std::size_t cls = 0;
};

Json subgroups_json(GroupPtr const &G)
{
  ConjugacyClassTable table(G);
  Json out = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const &H = table.representative(i);
    out.push_back(Json{{"class", i}, {"order", H.order()}, {"members", H.members},
                       {"class_size", table.conjugates(i).size()}});
  }
  return out;
}

Json weyl_json(GroupPtr const &G)
{
  ConjugacyClassTable table(G);
  Json out = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const &H = table.representative(i);
    out.push_back(Json{{"class", i},
                       {"subgroup_order", H.order()},
                       {"normalizer_order", normalizer(G, H).order()},
                       {"weyl_order", weyl_group(G, H).order()}});
  }
  return out;
}

Json marks_json(GroupPtr const &G)
{
  auto ring = make_burnside_ring(G);
  Json orders = Json::array(), rows = Json::array();
  for (auto const &H : ring->classes().representatives())
    orders.push_back(H.order());
  for (auto const &row : ring->marks()) {
    Json r = Json::array();
    for (auto const &m : row)
      r.push_back(to_json(m));
    rows.push_back(std::move(r));
  }
  return Json{{"class_orders", orders}, {"marks", rows}};
}

Json idempotents_json(GroupPtr const &G)
{
  auto ring = make_burnside_ring(G);
  Json out = Json::array();
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    Json coeffs = Json::array();
    for (auto const &c : idempotent(ring, i).coeffs)
      coeffs.push_back(to_json(c));
    out.push_back(Json{{"class", i}, {"subgroup_order", ring->classes().representative(i).order()},
                       {"coefficients", coeffs}});
  }
  return out;
}

Json model_json(GroupPtr const &G, int n_max)
{
  AlgebraicModel model = build_model(G, n_max);
  Json factors = Json::array();
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto const &f = model.factors[c];
    Json homs = Json::array();
    for (int a = 0; a <= n_max; ++a) {
      Json row = Json::array();
      for (int b = 0; b <= n_max; ++b)
        row.push_back(f.ea.structure->hom_dim(a, b));
      homs.push_back(std::move(row));
    }
    Json idem = Json::array();
    for (auto const &q : f.idempotent.coeffs)
      idem.push_back(to_json(q));
    factors.push_back(Json{{"class", c},
                           {"subgroup_order", f.subgroup.order()},
                           {"weyl_order", f.weyl->order()},
                           {"idempotent", idem},
                           {"hom_dims", homs}});
  }
  return Json{{"group_order", G->order()}, {"n_max", n_max}, {"factors", factors}};
}

Json hom_json(GroupPtr const &G, Config const &cfg)
{
  AlgebraicModel model = build_model(G, cfg.n_max);
  ModelObject X = model_object_from_json(read_json_file(cfg.x_path), model);
  ModelObject Y = model_object_from_json(read_json_file(cfg.y_path), model);
  auto h = homotopy_classes(model, X, Y);
  Json per = Json::array();
  for (auto const &d : h.per_class)
    per.push_back(to_json(d));
  return Json{{"per_class", per}, {"total", to_json(h.total)}};
}

Json demo_box_json(GroupPtr const &G, Config const &cfg)
{
  ConjugacyClassTable table(G);
  if (cfg.cls >= table.size())
    throw InvalidInputError("class index out of range");
  GroupPtr W = make_group(weyl_group(G, table.representative(cfg.cls)));
  EaCategory ea = build_Ea_for_group(W, cfg.n_max);
  Rng rng(mix_seed(cfg.seed, {900, cfg.cls}));
  RandomComplexOptions small;
  small.max_dim = 4;
  small.max_window = 3;
  DGModule M = random_ea_module(ea.category, rng, small);
  DGModule N = random_ea_module(ea.category, rng, small);
  ReducedBox box(M, N);
  Report r = check_monoidality(box, cfg.seed);
  GradedDims lhs = box.at(1).dims();
  GradedDims rhs = tensor(tensor_with_generators(M), tensor_with_generators(N)).dims();
  Json mdims = Json::array(), ndims = Json::array();
  for (int a = 0; a <= cfg.n_max; ++a) {
    mdims.push_back(to_json(M.value(a).dims()));
    ndims.push_back(to_json(N.value(a).dims()));
  }
  return Json{{"class", cfg.cls},
              {"weyl_order", W->order()},
              {"n_max", cfg.n_max},
              {"seed", cfg.seed},
              {"left_dims", mdims},
              {"right_dims", ndims},
              {"box_at_generator", to_json(lhs)},
              {"tensor_of_generators", to_json(rhs)},
              {"dims_agree", lhs == rhs},
              {"monoidality", to_json(r)},
              {"passed", r.passed() && lhs == rhs}};
}

// Returns the first failing check as "group / suite / check: detail", or "".
std::string first_failure(std::string const &group, std::vector<SuiteResult> const &suites)
{
  for (auto const &s : suites)
    for (auto const &c : s.report.checks)
      if (!c.passed)
        return group + " / " + s.name + " / " + c.name + ": " + c.detail;
  return {};
}

int run_verify_command(Config const &cfg, Json &out)
{
  VerifyOptions opt;
  opt.n_max = cfg.n_max;
  opt.module_n_max = std::min(cfg.n_max, 2);
  opt.seed = cfg.seed;
  std::vector<std::string> names;
  if (cfg.group.empty())
    names = corpus_group_names();
  else
    names = {cfg.group};
  Json groups = Json::array();
  std::string failure;
  for (auto const &name : names) {
    GroupPtr G = load_group(name);
    auto suites = run_verify(G, opt);
    Json js = Json::array();
    bool ok = true;
    for (auto const &s : suites) {
      js.push_back(to_json(s));
      ok = ok && s.passed();
    }
    if (failure.empty())
      failure = first_failure(name, suites);
    groups.push_back(Json{{"group", name}, {"order", G->order()}, {"passed", ok}, {"suites", js}});
  }
  out = Json{{"seed", cfg.seed}, {"n_max", cfg.n_max}, {"passed", failure.empty()}, {"groups", groups}};
  if (!failure.empty()) {
    std::cerr << "counterexample: " << failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Algebraic models for rational G-equivariant cohomology theories"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App *sub, bool group_required) {
    auto *g = sub->add_option("--group", cfg.group, "group name or JSON group file");
    if (group_required)
      g->required();
    sub->add_option("--nmax", cfg.n_max, "largest object of E_a")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for random objects");
    sub->add_option("--out", cfg.out, "write JSON here instead of standard output");
  };
  auto *subgroups = app.add_subcommand("subgroups", "conjugacy classes of subgroups");
  auto *weyl = app.add_subcommand("weyl", "Weyl group orders per class");
  auto *marks = app.add_subcommand("marks", "table of marks");
  auto *idems = app.add_subcommand("idempotents", "Burnside ring idempotents");
  auto *model = app.add_subcommand("model", "algebraic model summary");
  auto *hom = app.add_subcommand("hom", "homotopy classes of maps between model objects");
  auto *demo = app.add_subcommand("demo-box", "box product of two random modules");
  auto *verify = app.add_subcommand("verify", "run the lemma suite");
  for (auto *s : {subgroups, weyl, marks, idems, model, hom, demo})
    common(s, true);
  common(verify, false);
  hom->add_option("--x", cfg.x_path, "source model object")->required();
  hom->add_option("--y", cfg.y_path, "target model object")->required();
  demo->add_option("--class", cfg.cls, "subgroup class index");

  CLI11_PARSE(app, argc, argv);

  Json out;
  int status = 0;
  try {
    if (verify->parsed()) {
      status = run_verify_command(cfg, out);
    } else {
      GroupPtr G = load_group(cfg.group);
      if (subgroups->parsed())
        out = subgroups_json(G);
      else if (weyl->parsed())
        out = weyl_json(G);
      else if (marks->parsed())
        out = marks_json(G);
      else if (idems->parsed())
        out = idempotents_json(G);
      else if (model->parsed())
        out = model_json(G, cfg.n_max);
      else if (hom->parsed())
        out = hom_json(G, cfg);
      else if (demo->parsed()) {
        out = demo_box_json(G, cfg);
        status = out["passed"].get<bool>() ? 0 : 1;
      }
    }
  } catch (UnknownGroupError const &e) {
    std::cerr << "unknown group: " << e.what() << "\n";
    return 2;
  } catch (ParseError const &e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 3;
  } catch (InvalidInputError const &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (TruncationError const &e) {
    std::cerr << "truncation overflow: " << e.what() << "\n";
    return 4;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string text = out.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 1;
    }
    f << text;
  }
  return status;
}
