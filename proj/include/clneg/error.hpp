#pragma once

#include <stdexcept>
#include <string>

namespace clneg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when no constituency tree is available for a pruned fragment.
// The CLI maps this to exit code 2.
struct MissingTreeError : Error {
  explicit MissingTreeError(const std::string& msg) : Error(msg) {}
};

}  // namespace clneg
