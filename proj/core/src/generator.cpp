#include "atomsched/generator.hpp"

#include <limits>
#include <random>

#include <fmt/format.h>

#include "atomsched/errors.hpp"

namespace atomsched {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Accept only the largest multiple of `bound` below 2^64.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

ProblemInstance generate_instance(int users, std::uint64_t seed, const ApplianceCatalog& catalog) {
  if (users < 1) throw ValidationError(fmt::format("need at least one user, got {}", users));
  if (catalog.empty()) throw ValidationError("cannot draw appliances from an empty catalog");
  std::mt19937_64 rng(seed);
  std::vector<Appliance> appliances;
  appliances.reserve(static_cast<std::size_t>(users));
  for (int n = 0; n < users; ++n) {
    appliances.push_back(catalog.entries()[uniform_below(rng, catalog.size())].appliance);
  }
  const Horizon horizon(Horizon::kDefaultSlots);
  return ProblemInstance(horizon, std::move(appliances), default_cost_coefficients(horizon));
}

}  // namespace atomsched
