#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

/// Base of all library errors. The code maps one-to-one onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Code { invalid_input = 2, unsupported = 3, indeterminate = 4, internal = 5 };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

  const char* code_name() const noexcept {
    switch (code_) {
      case Code::invalid_input: return "invalid_input";
      case Code::unsupported: return "unsupported";
      case Code::indeterminate: return "indeterminate";
      case Code::internal: return "internal";
    }
    return "unknown";
  }

 private:
  Code code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(Code::invalid_input, what) {}
};

/// Size cap exceeded, or a case the library refuses to extrapolate to.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(Code::unsupported, what) {}
};

class IndeterminateError : public Error {
 public:
  explicit IndeterminateError(const std::string& what) : Error(Code::indeterminate, what) {}
};

/// A consistency check failed: non-integral divided power, rank mismatch, ...
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(Code::internal, what) {}
};

}  // namespace modrep
