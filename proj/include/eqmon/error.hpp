#pragma once

#include <stdexcept>
#include <string>

namespace eqmon {

// Base for every error thrown by the library. Budget and cap overruns have
// their own types so callers can tell "too expensive" from "wrong input".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqmon
