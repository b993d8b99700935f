#pragma once

#include <stdexcept>
#include <string>

namespace ggsp {

// Error categories; mirrored one-to-one by the C API status codes.
enum class errc {
  invalid_argument = 1,  // bad value, violated precondition
  parse = 2,             // malformed JSON, cycle string, or model text
  io = 3,                // file read/write failure
  numeric = 4,           // eigensolver failure, residual over budget
  verification = 5,      // a verification report exceeded its threshold
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ggsp
