#pragma once

#include <stdexcept>
#include <string>

namespace wfam {

enum class errc {
  usage,               // bad arguments or out-of-contract call
  validation,          // malformed input data (family/witness files, ranges)
  membership,          // a set that must belong to a family does not
  precondition,        // a stated operation precondition is violated
  overflow,            // 64-bit count arithmetic would wrap
  invalid_assignment,  // witness assignment fails its validity contract
  internal,            // invariant that must be unreachable was violated
  resource,            // node or capacity limit exceeded
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

}  // namespace wfam
