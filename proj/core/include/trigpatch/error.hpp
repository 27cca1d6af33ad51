#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace trigpatch {

enum class ErrorKind { Usage, Validation, Internal };

// Every failure raised by the library carries a stable code plus free-form context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message), kind_(kind), code_(std::move(code)), context_(std::move(context)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept { return context_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::map<std::string, std::string> context_;
};

inline Error validation_error(std::string code, const std::string& message,
                              std::map<std::string, std::string> context = {}) {
  return Error(ErrorKind::Validation, std::move(code), message, std::move(context));
}

inline Error internal_error(std::string code, const std::string& message,
                            std::map<std::string, std::string> context = {}) {
  return Error(ErrorKind::Internal, std::move(code), message, std::move(context));
}

}  // namespace trigpatch
