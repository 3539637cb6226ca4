#pragma once

#include <stdexcept>
#include <string>

namespace ntk {

enum class Errc {
  invalid_argument,   // malformed input value (bad id, bad parameter)
  contract_violation, // a documented precondition does not hold
  disconnected,       // connected input required
  inseparable,        // no separator disjoint from both sides exists
  parse_error,
  io_error,
  generator_failure,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ntk
