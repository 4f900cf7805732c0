#ifndef ATOMSCHED_ERRORS_HPP
#define ATOMSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atomsched {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed appliance, instance, schedule, flow configuration or document.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A flow row is not one-hot within the integrality tolerance.
class NotIntegralError : public Error {
 public:
  NotIntegralError(int row, const std::string& what) : Error(what), row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

// The convex backend did not reach an optimal point.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Successive relaxation exceeded its iteration cap.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

// Direct enumeration refused because the feasible set is larger than the
// allowed number of evaluations. The exact size is kept in decimal.
class TooLargeError : public Error {
 public:
  TooLargeError(std::string size_decimal, const std::string& what)
      : Error(what), size_(std::move(size_decimal)) {}
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

}  // namespace atomsched

#endif  // ATOMSCHED_ERRORS_HPP
