// Error types shared by every module.
//
// Input problems (bad arguments, failed axioms, exceeded bounds) are reported
// as subclasses of xmod::Error.  InvariantViolation is different: it is thrown
// when a property that a theorem guarantees for valid input fails, which means
// the library itself is wrong.

#ifndef XMOD_ERROR_HPP_
#define XMOD_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class NotHomomorphismError : public Error {
 public:
  using Error::Error;
};

class NormalityError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class WordOverflowError : public Error {
 public:
  using Error::Error;
};

class NotSurjectiveError : public Error {
 public:
  using Error::Error;
};

class ComplementError : public Error {
 public:
  using Error::Error;
};

// A failed axiom together with the first witnessing tuple in canonical
// element order.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, std::vector<std::uint32_t> witness,
             const std::string& what)
      : Error(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void invariant_failed(const std::string& msg) {
  throw InvariantViolation("invariant violated: " + msg);
}

}  // namespace xmod

#endif  // XMOD_ERROR_HPP_
