#include "atomsched/catalog.hpp"

#include <set>

#include <fmt/format.h>

#include "atomsched/errors.hpp"

namespace atomsched {

namespace {

ApplianceTemplate constant(std::string key, std::string name, int alpha, int beta, double level,
                           int delta) {
  return {std::move(key),
          Appliance{std::move(name), alpha, beta, delta,
                    std::vector<double>(static_cast<std::size_t>(delta), level)}};
}

}  // namespace

ApplianceCatalog::ApplianceCatalog(std::vector<ApplianceTemplate> entries)
    : entries_(std::move(entries)) {
  std::set<std::string, std::less<>> keys;
  for (const auto& e : entries_) {
    if (!keys.insert(e.key).second) {
      throw ValidationError(fmt::format("duplicate catalog key '{}'", e.key));
    }
  }
}

const ApplianceCatalog& ApplianceCatalog::defaults() {
  // PHEV window 22..29 is 10 PM to 5 AM.
  static const ApplianceCatalog catalog({
      constant("dish_washer", "Dish Washer", 0, 23, 0.72, 2),
      constant("washing_machine_energy_star", "Washing Machine (Energy-Star)", 0, 23, 0.4967, 3),
      constant("washing_machine_regular", "Washing Machine (Regular)", 0, 23, 0.6467, 3),
      constant("clothes_dryer", "Clothes Dryer", 0, 23, 0.625, 4),
      constant("phev", "PHEV", 22, 29, 3.3, 3),
  });
  return catalog;
}

std::optional<Appliance> ApplianceCatalog::find(std::string_view key) const {
  for (const auto& e : entries_) {
    if (e.key == key) return e.appliance;
  }
  return std::nullopt;
}

}  // namespace atomsched
