#ifndef ATOMSCHED_RESULTS_HPP
#define ATOMSCHED_RESULTS_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "atomsched/sweep.hpp"

namespace atomsched {

inline constexpr std::string_view kResultsCsvHeader =
    "n,n_d,seed,objective,lb,ub,gap,iterations,wall_ms";

// Doubles are written in shortest round-trip form in both encodings.
std::string results_to_csv(std::span<const SweepRow> rows);
std::string results_to_json(std::span<const SweepRow> rows);

// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace atomsched

#endif  // ATOMSCHED_RESULTS_HPP
