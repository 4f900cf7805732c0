#ifndef ATOMSCHED_CATALOG_HPP
#define ATOMSCHED_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomsched/core_model.hpp"

namespace atomsched {

struct ApplianceTemplate {
  std::string key;  // identifier used by instance files, e.g. "phev"
  Appliance appliance;
};

// Named appliance templates. The default catalog holds the five residential
// appliances of the reference benchmark (hourly slots, constant levels).
class ApplianceCatalog {
 public:
  ApplianceCatalog() = default;
  explicit ApplianceCatalog(std::vector<ApplianceTemplate> entries);

  static const ApplianceCatalog& defaults();

  const std::vector<ApplianceTemplate>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<Appliance> find(std::string_view key) const;

 private:
  std::vector<ApplianceTemplate> entries_;
};

}  // namespace atomsched

#endif  // ATOMSCHED_CATALOG_HPP
