#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run
{
  int status;
  std::string out;
};

Run cli(std::string const &args)
{
  std::string cmd = std::string(EQMODEL_CLI) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json parse(Run const &r)
{
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(CliTest, IdempotentsCyclic2)
{
  auto r = cli("idempotents --group cyclic-2");
  ASSERT_EQ(r.status, 0);
  auto j = parse(r);
  EXPECT_EQ(j[1]["coefficients"], nlohmann::json::parse(R"(["-1/2", "1"])"));
  EXPECT_EQ(j[0]["coefficients"], nlohmann::json::parse(R"(["1/2", "0"])"));
}

TEST(CliTest, SubgroupsOfTrivialGroup)
{
  auto r = cli("subgroups --group cyclic-1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse(r).size(), 1u);
}

TEST(CliTest, WeylAndMarks)
{
  auto w = parse(cli("weyl --group klein-4"));
  std::vector<int> orders;
  for (auto const &e : w)
    orders.push_back(e["weyl_order"]);
  EXPECT_EQ(orders, (std::vector<int>{4, 2, 2, 2, 1}));
  auto m = parse(cli("marks --group cyclic-2"));
  EXPECT_EQ(m["marks"], nlohmann::json::parse(R"([["2", "0"], ["1", "1"]])"));
}

TEST(CliTest, ModelSummary)
{
  auto j = parse(cli("model --group symmetric-3 --nmax 2"));
  EXPECT_EQ(j["factors"].size(), 4u);
  EXPECT_EQ(j["factors"][0]["hom_dims"][2][2], 216);
}

TEST(CliTest, HomBetweenFiles)
{
  std::string x = ::testing::TempDir() + "x.json";
  // unit at both classes of cyclic-2: the Weyl groups are C2 and 1
  std::ofstream(x) << R"({"components": [
    {"lo": 0, "hi": 0, "terms": {"0": {"dim": 2, "action": [{"rows": 2, "cols": 2, "entries": [[1, 0, "1"], [0, 1, "1"]]}]}}},
    {"lo": 0, "hi": 0, "terms": {"0": {"dim": 1}}}]})";
  auto r = cli("hom --group cyclic-2 --nmax 1 --x " + x + " --y " + x);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["total"], nlohmann::json::parse("[[0, 3]]"));
  std::remove(x.c_str());
}

TEST(CliTest, ExitCodes)
{
  EXPECT_EQ(cli("marks --group nonsense").status, 2);
  std::string bad = ::testing::TempDir() + "bad.json";
  std::ofstream(bad) << "{\"degree\": 2, \"generators\": [[0";
  EXPECT_EQ(cli("marks --group " + bad).status, 3);
  std::remove(bad.c_str());
  EXPECT_EQ(cli("demo-box --group cyclic-2 --nmax 1").status, 4);
}

TEST(CliTest, DemoBox)
{
  auto r = cli("demo-box --group symmetric-3 --nmax 2 --seed 5");
  ASSERT_EQ(r.status, 0);
  auto j = parse(r);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["box_at_generator"], j["tensor_of_generators"]);
}

TEST(CliTest, VerifySymmetric3)
{
  auto a = cli("verify --group symmetric-3");
  EXPECT_EQ(a.status, 0);
  EXPECT_TRUE(parse(a)["passed"].get<bool>());
  auto b = cli("verify --group symmetric-3");
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, OutFile)
{
  std::string path = ::testing::TempDir() + "subgroups.json";
  auto r = cli("subgroups --group klein-4 --out " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in).size(), 5u);
  std::remove(path.c_str());
}
