#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace eqmodel {

/// Index tuples to test an identity on: every tuple when the product of the
/// ranges is at most `budget`, otherwise `budget` seeded random tuples.
inline std::vector<std::vector<std::size_t>> sample_tuples(std::vector<std::size_t> const &ranges,
                                                           std::size_t budget, std::uint64_t seed)
{
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (auto r : ranges) {
    if (r == 0)
      return out;
    total = (total > budget) ? total : total * r;
  }
  if (total <= budget) {
    std::vector<std::size_t> t(ranges.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      out.push_back(t);
      for (std::size_t k = ranges.size(); k-- > 0;) {
        if (++t[k] < ranges[k])
          break;
        t[k] = 0;
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < budget; ++n) {
    std::vector<std::size_t> t;
    for (auto r : ranges)
      t.push_back(std::uniform_int_distribution<std::size_t>(0, r - 1)(rng));
    out.push_back(std::move(t));
  }
  return out;
}

/// Seed for one labelled sub-check, so that sampled checks are independent
/// but reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::vector<std::size_t> const &labels)
{
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (auto l : labels) {
    h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

/// "(1,0,2)"
inline std::string tuple_string(std::vector<std::size_t> const &t)
{
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace eqmodel
