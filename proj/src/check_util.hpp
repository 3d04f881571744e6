#pragma once

#include <functional>
#include <string>

#include "eqmodel/dg_category.hpp"
#include "eqmodel/sampling.hpp"

namespace eqmodel::detail {

inline Rational koszul(int p, int q)
{
  return ((p * q) % 2 == 0) ? 1 : -1;
}

// Accumulates the cases of one named identity.
struct Checker
{
  CheckResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  void record(bool ok, std::function<std::string()> const &describe)
  {
    ++result.cases;
    if (!ok && result.passed) {
      result.passed = false;
      result.detail = describe();
    }
  }
};

}  // namespace eqmodel::detail
