#ifndef STARFACT_ERROR_HPP
#define STARFACT_ERROR_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starfact {

/// Exact integer type used for every count the library reports.
using BigInt = boost::multiprecision::cpp_int;

enum class ErrorKind {
  kParse,            // malformed text input
  kInvalidArgument,  // well-formed input violating an operation's precondition
  kDomain,           // input outside the mathematical domain (e.g. not a factorization)
  kBoundExceeded,    // configured enumeration/brute-force budget exceeded
  kDefect,           // an internal invariant failed; indicates a bug or a false claim
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace starfact

#endif  // STARFACT_ERROR_HPP
