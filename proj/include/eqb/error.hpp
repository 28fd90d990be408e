#ifndef EQB_ERROR_HPP
#define EQB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eqb {

enum class ErrorCode {
  domain,    // invalid arguments / inconsistent specification
  parse,     // malformed input document
  numeric,   // an integrality or tolerance check failed
  gap,       // spectral gap violation
  symmetry,  // symmetry residual above tolerance
  internal,  // self-check failure (indicates a bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqb

#endif  // EQB_ERROR_HPP
