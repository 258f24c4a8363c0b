#pragma once

#include <stdexcept>
#include <string>

namespace csatm {

/// Configuration or input problem. The CLI maps this to exit code 2;
/// everything else that escapes is an internal error (exit code 1).
class CliError : public std::runtime_error {
 public:
  explicit CliError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace csatm
