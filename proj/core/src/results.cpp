#include "atomsched/results.hpp"

#include <fstream>

#include <fmt/format.h>

#include <json.hpp>

#include "atomsched/errors.hpp"

namespace atomsched {

std::string results_to_csv(std::span<const SweepRow> rows) {
  std::string out(kResultsCsvHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.users, r.n_d, r.seed,
                       to_string(r.objective), r.lower_bound, r.upper_bound, r.gap, r.iterations,
                       r.wall_ms);
  }
  return out;
}

std::string results_to_json(std::span<const SweepRow> rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    list.push_back({{"n", r.users},
                    {"n_d", r.n_d},
                    {"seed", r.seed},
                    {"objective", std::string(to_string(r.objective))},
                    {"lb", r.lower_bound},
                    {"ub", r.upper_bound},
                    {"gap", r.gap},
                    {"iterations", r.iterations},
                    {"wall_ms", r.wall_ms}});
  }
  return list.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError(fmt::format("cannot write '{}'", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ValidationError(fmt::format("failed writing '{}'", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ValidationError(fmt::format("cannot move '{}' into place: {}", path.string(), ec.message()));
  }
}

}  // namespace atomsched
