#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eagle {

/// Error categories carried across the C API boundary as status codes.
enum class Errc {
  IoError = 1,
  ParseError = 2,
  InvalidArgument = 3,
  Conflict = 4,
  LimitExceeded = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace eagle
