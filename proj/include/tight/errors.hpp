#pragma once

#include <stdexcept>
#include <string>

namespace tight {

// Error categories map one-to-one onto CLI exit codes.
enum class errc {
  parse = 2,         // bad input syntax or violated precondition
  out_of_scope = 3,  // e0 in {0, -1, -2}
  audit = 4,         // an internal cross-check failed
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(errc::parse, msg) {}
};

struct OutOfScopeError : Error {
  explicit OutOfScopeError(const std::string& msg) : Error(errc::out_of_scope, msg) {}
};

struct AuditError : Error {
  explicit AuditError(const std::string& msg) : Error(errc::audit, msg) {}
};

}  // namespace tight
