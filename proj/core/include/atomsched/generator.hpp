#ifndef ATOMSCHED_GENERATOR_HPP
#define ATOMSCHED_GENERATOR_HPP

#include <cstdint>

#include "atomsched/catalog.hpp"
#include "atomsched/core_model.hpp"

namespace atomsched {

// Draws `users` appliances uniformly with replacement from `catalog` on a
// 24-slot day with the default tariff. The stream is std::mt19937_64 seeded
// with `seed`; each draw takes 64-bit outputs and rejects the biased tail, so
// the result is identical on every platform.
ProblemInstance generate_instance(int users, std::uint64_t seed,
                                  const ApplianceCatalog& catalog = ApplianceCatalog::defaults());

}  // namespace atomsched

#endif  // ATOMSCHED_GENERATOR_HPP
