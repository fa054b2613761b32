#include "qgr/errors.hpp"

#include <sstream>
#include <utility>

namespace qgr {

namespace {

std::string too_large_message(std::uint64_t rank, std::uint64_t cap) {
  std::ostringstream os;
  os << "instance too large: rank " << rank << " exceeds cap " << cap;
  return os.str();
}

std::string cross_check_message(const std::string& a, double va, const std::string& b, double vb) {
  std::ostringstream os;
  os.precision(17);
  os << "cross-check failure: " << a << " = " << va << " but " << b << " = " << vb;
  return os.str();
}

}  // namespace

InstanceTooLarge::InstanceTooLarge(std::uint64_t rank, std::uint64_t cap)
    : std::runtime_error(too_large_message(rank, cap)), rank_(rank), cap_(cap) {}

IterationFailure::IterationFailure(std::size_t iterations, double last_estimate,
                                   std::vector<double> last_iterate)
    : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                         " iterations"),
      iterations_(iterations),
      last_estimate_(last_estimate),
      last_iterate_(std::move(last_iterate)) {}

CrossCheckFailure::CrossCheckFailure(std::string first_route, double first_value,
                                     std::string second_route, double second_value)
    : std::runtime_error(cross_check_message(first_route, first_value, second_route, second_value)),
      first_value_(first_value),
      second_value_(second_value) {}

}  // namespace qgr
