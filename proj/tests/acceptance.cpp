// One line per acceptance criterion; exit status is nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "eqmodel/verify.hpp"

using namespace eqmodel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;

  void take(std::string const &group, SuiteResult const &s)
  {
    for (auto const &c : s.report.checks) {
      cases += c.cases;
      if (!c.passed && passed) {
        passed = false;
        detail = group + " / " + c.name + ": " + c.detail;
      }
    }
  }
  void fail(std::string d)
  {
    if (passed)
      detail = std::move(d);
    passed = false;
  }
};

struct CommandResult
{
  int status = -1;
  std::string output;
  double seconds = 0;
};

CommandResult run_command(std::string const &cmd)
{
  CommandResult r;
  auto t0 = Clock::now();
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.output.append(buf.data(), n);
  r.status = pclose(p);
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<GroupPtr> corpus()
{
  std::vector<GroupPtr> out;
  for (auto const &name : corpus_group_names())
    out.push_back(make_group(named_group(name)));
  return out;
}

}  // namespace

int main()
{
  auto const names = corpus_group_names();
  auto const groups = corpus();
  VerifyOptions opt;  // seed 0, 100 complexes, 50 adjunction complexes, 20 pairs
  int failures = 0;

  auto report = [&](int id, std::string const &title, Outcome const &o, double secs) {
    std::ostringstream line;
    line << "criterion " << (id < 10 ? " " : "") << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << title
         << "  (" << o.cases << " cases, " << std::fixed;
    line.precision(1);
    line << secs << " s)";
    if (!o.passed)
      line << "\n    first failure: " << o.detail;
    std::cout << line.str() << std::endl;
    failures += !o.passed;
  };

  // 12 first: its first run doubles as the runtime measurement for 9.
  std::string cmd = std::string(EQMODEL_CLI) + " verify --nmax 2 --seed 0";
  CommandResult first = run_command(cmd), second = run_command(cmd);

  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      auto s0 = Clock::now();
      o.take(names[g], burnside_splitting_suite(groups[g]));
      if (seconds_since(s0) >= 5)
        o.fail(names[g] + " took longer than 5 s");
    }
    report(1, "Burnside splitting", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], restriction_vanishing_suite(groups[g]));
    report(2, "restriction vanishing", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], family_idempotent_suite(groups[g]));
    report(3, "family idempotents", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], pushout_product_suite(groups[g]));
    report(4, "pushout-product cokernel", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], fixed_point_homology_suite(groups[g], opt));
    double secs = seconds_since(t0);
    if (secs >= 30)
      o.fail("took longer than 30 s");
    report(5, "fixed points commute with homology", o, secs);
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], generator_lemma_suite(groups[g], opt));
    report(6, "generator lemma", o, seconds_since(t0));
  }

  std::vector<AlgebraicModel> models, module_models;
  for (auto const &G : groups) {
    models.push_back(build_model(G, 3));
    module_models.push_back(build_model(G, 2));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], formality_suite(models[g], opt));
    o.take("negative control", formality_negative_control());
    report(7, "formality zig-zag", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], endomorphism_suite(models[g]));
    report(8, "endomorphism identification", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      o.take(names[g], adjunction_suite(module_models[g], opt));
    if (first.status != 0)
      o.fail("verify --nmax 2 exited with status " + std::to_string(first.status));
    else if (first.seconds >= 60)
      o.fail("verify --nmax 2 over the corpus took " + std::to_string(first.seconds) + " s");
    report(9, "generator adjunction", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    o.take("random categories", coend_suite(opt));
    report(10, "co-Yoneda and Fubini", o, seconds_since(t0));
  }
  {
    Outcome o;
    auto t0 = Clock::now();
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (names[g] == "symmetric-3" || names[g] == "klein-4")
        o.take(names[g], classification_suite(models[g], opt));
    report(11, "classification cross-check", o, seconds_since(t0));
  }
  {
    Outcome o;
    o.cases = 2;
    if (first.output.empty())
      o.fail("no output from " + cmd);
    else if (first.output != second.output)
      o.fail("outputs differ between runs");
    report(12, "determinism of verify", o, first.seconds + second.seconds);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
