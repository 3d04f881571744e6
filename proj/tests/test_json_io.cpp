#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "eqmodel/json_io.hpp"
#include "eqmodel/random_objects.hpp"

using namespace eqmodel;

TEST(JsonIoTest, Rationals)
{
  EXPECT_EQ(to_json(Rational(-1, 2)), Json("-1/2"));
  EXPECT_EQ(rational_from_json(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(rational_from_json(Json(4)), Rational(4));
  EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
}

TEST(JsonIoTest, MatrixRoundTrip)
{
  Matrix m = Matrix::from_dense({{0, Rational(1, 3)}, {-2, 0}, {0, 0}});
  Json j = to_json(m);
  EXPECT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(matrix_from_json(j), m);
  j["entries"].push_back(Json::array({5, 0, "1"}));
  EXPECT_THROW(matrix_from_json(j), ParseError);
}

TEST(JsonIoTest, GroupRoundTrip)
{
  auto G = named_group("dihedral-8");
  auto H = group_from_json(to_json(G));
  EXPECT_EQ(H.order(), 8u);
  EXPECT_EQ(H, G);
  EXPECT_THROW(group_from_json(Json::parse(R"({"degree": 3, "generators": [[0, 1]]})")), ParseError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"degree": 2, "generators": [[0, 0]]})")), ParseError);
}

TEST(JsonIoTest, LoadGroupByNameOrFile)
{
  EXPECT_EQ(load_group("klein-4")->order(), 4u);
  EXPECT_THROW(load_group("no-such-group"), UnknownGroupError);
  std::string path = ::testing::TempDir() + "c3.json";
  std::ofstream(path) << R"({"degree": 3, "generators": [[1, 2, 0]]})";
  EXPECT_EQ(load_group(path)->order(), 3u);
  std::ofstream(path) << "{\"degree\": ";
  EXPECT_THROW(load_group(path), ParseError);
  std::remove(path.c_str());
}

TEST(JsonIoTest, ComplexRoundTrip)
{
  auto G = make_group(named_group("symmetric-3"));
  Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    auto X = random_complex(G, rng);
    Json j = to_json(X);
    auto Y = complex_from_json(j, G);
    EXPECT_EQ(to_json(Y), j);
    EXPECT_EQ(homology_dims(Y), homology_dims(X));
  }
}

TEST(JsonIoTest, ComplexValidation)
{
  // d∘d ≠ 0
  Json bad = Json::parse(R"({"group": "cyclic-1", "lo": 0, "hi": 2,
    "terms": {"0": {"dim": 1}, "1": {"dim": 1}, "2": {"dim": 1}},
    "differentials": {"1": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]},
                      "2": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]}}})");
  EXPECT_THROW(complex_from_json(bad), ParseError);
  bad["differentials"].erase("2");
  EXPECT_EQ(homology_dims(complex_from_json(bad)), (GradedDims{{2, 1}}));
  Json wrong_group = Json::parse(R"({"group": "nope", "lo": 0, "hi": 0, "terms": {"0": {"dim": 1}}})");
  EXPECT_THROW(complex_from_json(wrong_group), UnknownGroupError);
}

TEST(JsonIoTest, ModelObjectRoundTrip)
{
  auto model = build_model(make_group(named_group("klein-4")), 1);
  Rng rng(3);
  auto X = random_model_object(model, rng);
  auto Y = model_object_from_json(to_json(X), model);
  auto a = homotopy_classes(model, X, X), b = homotopy_classes(model, Y, Y);
  EXPECT_EQ(a.total, b.total);
  Json short_one = to_json(X);
  short_one["components"].erase(0);
  EXPECT_THROW(model_object_from_json(short_one, model), ParseError);
}

TEST(JsonIoTest, GradedDimsDropZeros)
{
  EXPECT_EQ(to_json(GradedDims{{-1, 0}, {0, 2}, {3, 1}}).dump(), "[[0,2],[3,1]]");
}
