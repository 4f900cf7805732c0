#include "atomsched/instance_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>

#include <json.hpp>

#include "atomsched/errors.hpp"

namespace atomsched {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw ValidationError(fmt::format("{}: {}", where.empty() ? "/" : where, why));
}

void reject_unknown(const json& object, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) fail(where, "expected an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || item.key() == key;
    if (!known) fail(where, fmt::format("unknown field '{}'", item.key()));
  }
}

const json& require(const json& object, const std::string& where, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) fail(where, fmt::format("missing field '{}'", key));
  return *it;
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<int>();
}

double as_number(const json& value, const std::string& where) {
  if (!value.is_number()) fail(where, "expected a number");
  return value.get<double>();
}

std::vector<double> parse_cost(const json& cost, int slots, const std::string& where) {
  reject_unknown(cost, where, {"tiers", "per_slot"});
  if (cost.contains("tiers") == cost.contains("per_slot")) {
    fail(where, "exactly one of 'tiers' or 'per_slot' is required");
  }
  std::vector<double> a;
  if (cost.contains("per_slot")) {
    const json& list = cost["per_slot"];
    const std::string at = where + "/per_slot";
    if (!list.is_array()) fail(at, "expected an array");
    if (list.size() != static_cast<std::size_t>(slots)) {
      fail(at, fmt::format("expected {} coefficients, got {}", slots, list.size()));
    }
    for (std::size_t h = 0; h < list.size(); ++h) {
      a.push_back(as_number(list[h], fmt::format("{}/{}", at, h)));
    }
    return a;
  }
  const json& tiers = cost["tiers"];
  const std::string at = where + "/tiers";
  if (!tiers.is_array()) fail(at, "expected an array");
  std::vector<int> covered(static_cast<std::size_t>(slots), 0);
  a.assign(static_cast<std::size_t>(slots), 0.0);
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    const std::string tier_at = fmt::format("{}/{}", at, t);
    reject_unknown(tiers[t], tier_at, {"from", "to", "a"});
    const int from = as_int(require(tiers[t], tier_at, "from"), tier_at + "/from");
    const int to = as_int(require(tiers[t], tier_at, "to"), tier_at + "/to");
    const double value = as_number(require(tiers[t], tier_at, "a"), tier_at + "/a");
    if (from < 0 || to >= slots || from > to) {
      fail(tier_at, fmt::format("slot range [{}, {}] outside [0, {}]", from, to, slots - 1));
    }
    for (int h = from; h <= to; ++h) {
      if (covered[static_cast<std::size_t>(h)]++) fail(tier_at, fmt::format("slot {} priced twice", h));
      a[static_cast<std::size_t>(h)] = value;
    }
  }
  for (int h = 0; h < slots; ++h) {
    if (!covered[static_cast<std::size_t>(h)]) fail(at, fmt::format("slot {} has no tier", h));
  }
  return a;
}

Appliance parse_appliance(const json& entry, const Horizon& horizon,
                          const ApplianceCatalog& catalog, const std::string& where) {
  Appliance appliance;
  if (entry.is_object() && entry.contains("catalog")) {
    reject_unknown(entry, where, {"catalog", "name"});
    const json& key = entry["catalog"];
    if (!key.is_string()) fail(where + "/catalog", "expected a string");
    auto found = catalog.find(key.get<std::string>());
    if (!found) fail(where + "/catalog", fmt::format("unknown catalog entry '{}'", key.get<std::string>()));
    appliance = *found;
    if (entry.contains("name")) {
      if (!entry["name"].is_string()) fail(where + "/name", "expected a string");
      appliance.name = entry["name"].get<std::string>();
    }
  } else {
    reject_unknown(entry, where, {"name", "alpha", "beta", "delta", "gamma"});
    const json& name = require(entry, where, "name");
    if (!name.is_string()) fail(where + "/name", "expected a string");
    appliance.name = name.get<std::string>();
    appliance.alpha = as_int(require(entry, where, "alpha"), where + "/alpha");
    appliance.beta = as_int(require(entry, where, "beta"), where + "/beta");
    appliance.delta = as_int(require(entry, where, "delta"), where + "/delta");
    const json& gamma = require(entry, where, "gamma");
    if (gamma.is_array()) {
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        appliance.gamma_op.push_back(as_number(gamma[k], fmt::format("{}/gamma/{}", where, k)));
      }
    } else {
      const double level = as_number(gamma, where + "/gamma");
      if (appliance.delta >= 1) {
        appliance.gamma_op.assign(static_cast<std::size_t>(appliance.delta), level);
      }
    }
  }
  try {
    validate(appliance, horizon);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  return appliance;
}

}  // namespace

ProblemInstance parse_instance(std::string_view document, const ApplianceCatalog& catalog) {
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("syntax error: {}", e.what()));
  }
  reject_unknown(root, "", {"format", "version", "horizon", "cost", "appliances"});
  const json& format = require(root, "", "format");
  if (!format.is_string() || format.get<std::string>() != kInstanceFormat) {
    fail("/format", fmt::format("expected \"{}\"", kInstanceFormat));
  }
  const int version = as_int(require(root, "", "version"), "/version");
  if (version != kInstanceVersion) {
    fail("/version", fmt::format("unsupported version {}", version));
  }
  int slots = Horizon::kDefaultSlots;
  if (root.contains("horizon")) slots = as_int(root["horizon"], "/horizon");
  Horizon horizon;
  try {
    horizon = Horizon(slots);
  } catch (const ValidationError& e) {
    fail("/horizon", e.what());
  }

  std::vector<double> coefficients = root.contains("cost")
                                         ? parse_cost(root["cost"], slots, "/cost")
                                         : default_cost_coefficients(horizon);

  const json& list = require(root, "", "appliances");
  if (!list.is_array() || list.empty()) fail("/appliances", "expected a nonempty array");
  std::vector<Appliance> appliances;
  for (std::size_t n = 0; n < list.size(); ++n) {
    appliances.push_back(parse_appliance(list[n], horizon, catalog, fmt::format("/appliances/{}", n)));
  }
  try {
    return ProblemInstance(horizon, std::move(appliances), std::move(coefficients));
  } catch (const ValidationError& e) {
    fail("/cost", e.what());
  }
}

std::string serialize_instance(const ProblemInstance& instance) {
  json root;
  root["format"] = kInstanceFormat;
  root["version"] = kInstanceVersion;
  root["horizon"] = instance.slots();
  root["cost"]["per_slot"] = std::vector<double>(instance.cost_coefficients().begin(),
                                                 instance.cost_coefficients().end());
  json list = json::array();
  for (const Appliance& a : instance.appliances()) {
    list.push_back({{"name", a.name},
                    {"alpha", a.alpha},
                    {"beta", a.beta},
                    {"delta", a.delta},
                    {"gamma", a.gamma_op}});
  }
  root["appliances"] = std::move(list);
  return root.dump(2) + "\n";
}

ProblemInstance load_instance(const std::filesystem::path& path, const ApplianceCatalog& catalog) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(fmt::format("cannot open instance file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str(), catalog);
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace atomsched
