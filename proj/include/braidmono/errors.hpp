#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace braidmono {

// Common base for library errors. Concrete types live next to the operations
// that raise them. Messages can pick up context (a loop index, a subcommand)
// while propagating without losing the dynamic type.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message)
      : std::runtime_error(message), message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  void add_context(const std::string& prefix) {
    message_ = prefix + ": " + message_;
  }

 private:
  std::string message_;
};

// Malformed user-facing text input: words, complex numbers, coefficient lists.
struct InputParseError : Error {
  using Error::Error;
};

}  // namespace braidmono
