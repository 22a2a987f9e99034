#ifndef GYRO_ERROR_HPP
#define GYRO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gyro {

enum class errc {
  invalid_argument,
  parse_error,
  index_out_of_range,
  resource_limit,
  not_a_group,
  not_a_subgyrogroup,
  not_an_l_subgyrogroup,
  precondition_unmet,
  parent_mismatch,
  outside_ball,
  mismatched_c,
  tolerance_not_positive,
  partition_failure,
  empty_subset,
  io_error,
};

const char* errc_name(errc code);

// Single exception type carrying a machine-readable code plus a message.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace gyro

#endif
