#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toriq {

// Domain error carrying a stable machine-readable code such as
// "not_full_dimensional" or "does_not_generate".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace toriq
