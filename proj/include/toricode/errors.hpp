#pragma once

#include <stdexcept>
#include <string>

namespace toricode {

// Failure category; the CLI maps these onto exit codes (2/3/4).
enum class ErrorKind {
  Input,        // malformed or inconsistent input data
  Unsupported,  // valid data the library deliberately does not handle
  Guard,        // a resource guard tripped
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error inputError(const std::string& msg) {
  return Error(ErrorKind::Input, msg);
}
inline Error unsupportedError(const std::string& msg) {
  return Error(ErrorKind::Unsupported, msg);
}
inline Error guardError(const std::string& msg) {
  return Error(ErrorKind::Guard, msg);
}

}  // namespace toricode
