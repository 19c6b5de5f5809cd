#ifndef CRA_ERROR_H_
#define CRA_ERROR_H_

#include <stdexcept>
#include <string>

namespace cra {

enum class ErrorCode {
  kInvalidArgument,  // malformed or out-of-contract input
  kInfeasible,       // caps admit no connected assignment
  kTooLarge,         // enumeration or candidate space over its configured cap
  kParse,            // malformed JSON
};

// Every failure raised by the library carries one of the codes above so
// the command-line tool can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cra

#endif  // CRA_ERROR_H_
