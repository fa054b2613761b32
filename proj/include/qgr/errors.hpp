#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgr {

/// Raised when binomial(n,k) exceeds the configured rank cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(std::uint64_t rank, std::uint64_t cap);

  std::uint64_t rank() const noexcept { return rank_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t rank_;
  std::uint64_t cap_;
};

/// Power iteration did not settle within its iteration budget.
class IterationFailure : public std::runtime_error {
 public:
  IterationFailure(std::size_t iterations, double last_estimate,
                   std::vector<double> last_iterate);

  std::size_t iterations() const noexcept { return iterations_; }
  double last_estimate() const noexcept { return last_estimate_; }
  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

 private:
  std::size_t iterations_;
  double last_estimate_;
  std::vector<double> last_iterate_;
};

/// Two independent routes to the same quantity disagree beyond tolerance.
class CrossCheckFailure : public std::runtime_error {
 public:
  CrossCheckFailure(std::string first_route, double first_value,
                    std::string second_route, double second_value);

  double first_value() const noexcept { return first_value_; }
  double second_value() const noexcept { return second_value_; }

 private:
  double first_value_;
  double second_value_;
};

}  // namespace qgr
