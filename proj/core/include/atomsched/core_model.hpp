#ifndef ATOMSCHED_CORE_MODEL_HPP
#define ATOMSCHED_CORE_MODEL_HPP

// Time-slot arithmetic, appliances and problem instances.
//
// A day is split into H slots numbered 0..H-1. An appliance must run for
// `delta` contiguous slots (modulo H) inside its window [alpha, beta], where
// beta may exceed H-1 to describe a window that wraps past midnight
// (e.g. 22..29 on a 24-slot day is 10 PM to 5 AM).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atomsched {

using BigInt = boost::multiprecision::cpp_int;

class Horizon {
 public:
  static constexpr int kDefaultSlots = 24;

  Horizon() = default;
  explicit Horizon(int slots);

  int slots() const noexcept { return slots_; }

  // Maps any integer (including negative offsets) onto 0..H-1.
  int wrap(long long index) const noexcept {
    const long long h = slots_;
    return static_cast<int>(((index % h) + h) % h);
  }

  bool operator==(const Horizon&) const = default;

 private:
  int slots_ = kDefaultSlots;
};

struct Appliance {
  std::string name;
  int alpha = 0;  // window start slot, 0..H-1
  int beta = 0;   // window end, extended index up to 2H-2
  int delta = 1;  // operation length in slots
  std::vector<double> gamma_op;  // kWh drawn in each of the delta slots

  // Energy level `offset` slots after the start; 0 outside 0..delta-1.
  double level(int offset) const noexcept {
    return offset >= 0 && offset < delta ? gamma_op[static_cast<std::size_t>(offset)] : 0.0;
  }

  bool operator==(const Appliance&) const = default;
};

// Throws ValidationError describing the first violated invariant.
void validate(const Appliance& appliance, const Horizon& horizon);

// Feasible start slots, ordered by the pre-modulo index i = alpha, alpha+1, ...
struct StartSet {
  int first_index = 0;     // alpha; position k corresponds to i = alpha + k
  std::vector<int> starts; // i mod H for each position

  std::size_t size() const noexcept { return starts.size(); }
  bool contains(int slot) const noexcept;
  // Position of `slot` in `starts`, or -1.
  int position(int slot) const noexcept;
};

double total_daily_energy(const Appliance& appliance);

StartSet feasible_starts(const Appliance& appliance, const Horizon& horizon);

// Slots occupied by an operation of length `delta` starting at `start`,
// in operation order (start, start+1, ... modulo H).
std::vector<int> operation_range(int start, int delta, const Horizon& horizon);

// Immutable, validated problem description. Start sets are computed once.
class ProblemInstance {
 public:
  ProblemInstance(Horizon horizon, std::vector<Appliance> appliances,
                  std::vector<double> cost_coefficients);

  const Horizon& horizon() const noexcept { return horizon_; }
  int slots() const noexcept { return horizon_.slots(); }
  int size() const noexcept { return static_cast<int>(appliances_.size()); }
  std::span<const Appliance> appliances() const noexcept { return appliances_; }
  const Appliance& appliance(int n) const { return appliances_.at(static_cast<std::size_t>(n)); }
  std::span<const double> cost_coefficients() const noexcept { return cost_coefficients_; }
  const StartSet& starts(int n) const { return start_sets_.at(static_cast<std::size_t>(n)); }

  double total_energy() const noexcept { return total_energy_; }
  // Sum of |S_n| over all users.
  std::size_t total_start_count() const noexcept;

  bool operator==(const ProblemInstance& other) const {
    return horizon_ == other.horizon_ && appliances_ == other.appliances_ &&
           cost_coefficients_ == other.cost_coefficients_;
  }

 private:
  Horizon horizon_;
  std::vector<Appliance> appliances_;
  std::vector<double> cost_coefficients_;
  std::vector<StartSet> start_sets_;
  double total_energy_ = 0.0;
};

// Two-tier example tariff: 0.2 cent/kWh^2 for slots 0..7, 0.3 afterwards,
// stretched proportionally when H != 24.
std::vector<double> default_cost_coefficients(const Horizon& horizon);

// Exact product of start-set sizes.
BigInt enumeration_size(const ProblemInstance& instance);

}  // namespace atomsched

#endif  // ATOMSCHED_CORE_MODEL_HPP
