#pragma once

#include <stdexcept>
#include <string>

namespace pathres {

// Input exceeds a documented size guard.  Mapped to CLI exit code 3.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-domain argument.  Mapped to CLI exit code 2.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A structural property the construction depends on failed to hold.
// Mapped to CLI exit code 1.
struct CheckError : std::logic_error {
  explicit CheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace pathres
