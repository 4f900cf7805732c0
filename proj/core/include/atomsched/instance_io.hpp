#ifndef ATOMSCHED_INSTANCE_IO_HPP
#define ATOMSCHED_INSTANCE_IO_HPP

// Versioned JSON instance documents.
//
//   {
//     "format": "atomsched-instance",
//     "version": 1,
//     "horizon": 24,
//     "cost": {"tiers": [{"from": 0, "to": 7, "a": 0.2},
//                        {"from": 8, "to": 23, "a": 0.3}]},
//     "appliances": [
//       {"catalog": "phev"},
//       {"name": "pump", "alpha": 6, "beta": 17, "delta": 2, "gamma": [0.5, 0.3]}
//     ]
//   }
//
// "cost" may instead be {"per_slot": [a_0, ..., a_{H-1}]} or be omitted for the
// default two-tier tariff. "gamma" is a list of delta levels or one constant
// level. A catalog entry may override "name". Unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "atomsched/catalog.hpp"
#include "atomsched/core_model.hpp"

namespace atomsched {

inline constexpr std::string_view kInstanceFormat = "atomsched-instance";
inline constexpr int kInstanceVersion = 1;

// Throws ValidationError; syntax errors carry line and column, semantic errors
// the JSON pointer of the offending value.
ProblemInstance parse_instance(std::string_view document,
                               const ApplianceCatalog& catalog = ApplianceCatalog::defaults());

// Canonical form: inline appliances and per-slot coefficients.
std::string serialize_instance(const ProblemInstance& instance);

ProblemInstance load_instance(const std::filesystem::path& path,
                              const ApplianceCatalog& catalog = ApplianceCatalog::defaults());

}  // namespace atomsched

#endif  // ATOMSCHED_INSTANCE_IO_HPP
