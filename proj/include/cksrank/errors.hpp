#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cksrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when no single line is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Out-of-range or inconsistent caller-supplied parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A documented precondition or internal invariant did not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A statistic whose closed form divides by zero for the given input.
class SingularStatistic : public Error {
 public:
  using Error::Error;
};

}  // namespace cksrank
