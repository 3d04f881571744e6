#include "eqmodel/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace eqmodel {

namespace {

template <class F>
auto parsing(std::string const &what, F &&body)
{
  try {
    return body();
  } catch (UnknownGroupError const &) {
    throw;
  } catch (ParseError const &) {
    throw;
  } catch (std::exception const &e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::size_t as_size(Json const &j)
{
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError("expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

int as_int(Json const &j)
{
  if (!j.is_number_integer())
    throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

}  // namespace

Json to_json(Rational const &q)
{
  return to_string(q);
}

Rational rational_from_json(Json const &j)
{
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

Json to_json(Matrix const &m)
{
  Json entries = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVec const col = m.column(c);
    for (auto const &[r, v] : col.entries())
      entries.push_back(Json::array({r, c, to_json(v)}));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(Json const &j)
{
  if (!j.is_object())
    throw ParseError("matrix must be an object");
  std::size_t rows = as_size(j.at("rows")), cols = as_size(j.at("cols"));
  std::vector<std::vector<SparseVec::Entry>> columns(cols);
  for (auto const &e : j.value("entries", Json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("matrix entry must be [row, col, value]");
    std::size_t r = as_size(e[0]), c = as_size(e[1]);
    if (r >= rows || c >= cols)
      throw ParseError("matrix entry out of range");
    columns[c].emplace_back(r, rational_from_json(e[2]));
  }
  std::vector<SparseVec> cs;
  for (auto &c : columns)
    cs.push_back(SparseVec::from_unsorted(std::move(c)));
  return Matrix::from_columns(rows, std::move(cs));
}

Json to_json(FiniteGroup const &G)
{
  Json gens = Json::array();
  for (auto const &g : G.generators())
    gens.push_back(g.images());
  return Json{{"degree", G.degree()}, {"generators", gens}};
}

FiniteGroup group_from_json(Json const &j)
{
  return parsing("group", [&] {
    std::size_t degree = as_size(j.at("degree"));
    std::vector<Permutation> gens;
    for (auto const &g : j.at("generators")) {
      std::vector<std::size_t> images;
      for (auto const &x : g)
        images.push_back(as_size(x));
      if (images.size() != degree)
        throw ParseError("generator length differs from degree");
      gens.emplace_back(std::move(images));
    }
    return FiniteGroup::from_generators(degree, std::move(gens));
  });
}

Json read_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (Json::exception const &e) {
    throw ParseError(path + ": " + e.what());
  }
}

GroupPtr load_group(std::string const &name_or_path)
{
  try {
    return make_group(named_group(name_or_path));
  } catch (UnknownGroupError const &) {
    if (!std::filesystem::is_regular_file(name_or_path))
      throw;
  }
  return make_group(group_from_json(read_json_file(name_or_path)));
}

Json to_json(ChainComplex const &x)
{
  Json terms = Json::object(), diffs = Json::object();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    Json action = Json::array();
    GRepresentation const term = x.term(n);
    for (auto const &m : term.generator_action())
      action.push_back(to_json(m));
    terms[std::to_string(n)] = Json{{"dim", x.dim(n)}, {"action", action}};
    if (n > x.lo())
      diffs[std::to_string(n)] = to_json(x.differential(n));
  }
  return Json{{"lo", x.lo()}, {"hi", x.hi()}, {"terms", terms}, {"differentials", diffs}};
}

ChainComplex complex_from_json(Json const &j, GroupPtr const &fallback)
{
  return parsing("complex", [&] {
    GroupPtr G = fallback;
    if (j.contains("group")) {
      auto const &g = j.at("group");
      G = g.is_string() ? load_group(g.get<std::string>()) : make_group(group_from_json(g));
    }
    if (!G)
      G = trivial_group();
    auto const &terms = j.at("terms");
    if (terms.empty())
      return ChainComplex::zero(G);
    int lo = as_int(j.at("lo")), hi = as_int(j.at("hi"));
    if (hi < lo)
      throw ParseError("hi < lo");
    std::vector<GRepresentation> reps;
    for (int n = lo; n <= hi; ++n) {
      auto key = std::to_string(n);
      if (!terms.contains(key)) {
        reps.push_back(GRepresentation::trivial(G, 0));
        continue;
      }
      auto const &t = terms.at(key);
      std::size_t dim = as_size(t.at("dim"));
      if (!t.contains("action")) {
        reps.push_back(GRepresentation::trivial(G, dim));
        continue;
      }
      std::vector<Matrix> action;
      for (auto const &m : t.at("action"))
        action.push_back(matrix_from_json(m));
      reps.emplace_back(G, dim, std::move(action));
    }
    Json const diffs = j.value("differentials", Json::object());
    std::vector<Matrix> d;
    for (int n = lo + 1; n <= hi; ++n) {
      auto key = std::to_string(n);
      std::size_t rows = reps[std::size_t(n - 1 - lo)].dim(), cols = reps[std::size_t(n - lo)].dim();
      Matrix m = diffs.contains(key) ? matrix_from_json(diffs.at(key)) : Matrix(rows, cols);
      if (m.rows() != rows || m.cols() != cols)
        throw ParseError("differential " + key + " has the wrong shape");
      d.push_back(std::move(m));
    }
    return ChainComplex(G, lo, std::move(reps), std::move(d));
  });
}

ModelObject model_object_from_json(Json const &j, AlgebraicModel const &model)
{
  ModelObject X = parsing("model object", [&] {
    auto const &cs = j.at("components");
    if (!cs.is_array() || cs.size() != model.factors.size())
      throw ParseError("expected " + std::to_string(model.factors.size()) + " components");
    ModelObject out;
    for (std::size_t c = 0; c < cs.size(); ++c)
      out.components.push_back(complex_from_json(cs[c], model.factors[c].weyl));
    return out;
  });
  parsing("model object", [&] {
    check_shape(model, X);
    return 0;
  });
  return X;
}

Json to_json(ModelObject const &x)
{
  Json cs = Json::array();
  for (auto const &c : x.components)
    cs.push_back(to_json(c));
  return Json{{"components", cs}};
}

Json to_json(GradedDims const &d)
{
  Json out = Json::array();
  for (auto const &[n, k] : d)
    if (k > 0)
      out.push_back(Json::array({n, k}));
  return out;
}

Json to_json(Subgroup const &H)
{
  return Json{{"order", H.order()}, {"members", H.members}};
}

Json to_json(Report const &r)
{
  Json checks = Json::array();
  for (auto const &c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed)
      e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return checks;
}

Json to_json(SuiteResult const &s)
{
  return Json{{"suite", s.name}, {"passed", s.passed()}, {"checks", to_json(s.report)}};
}

}  // namespace eqmodel
