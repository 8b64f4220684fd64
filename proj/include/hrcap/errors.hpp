#pragma once

#include <stdexcept>
#include <string>

namespace hrcap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnmatchableAgent : public Error {
 public:
  using Error::Error;
};

class EmptyPreferenceList : public Error {
 public:
  using Error::Error;
};

class InvalidMatching : public Error {
 public:
  using Error::Error;
};

class NotEnvyFree : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class UncoverableElement : public Error {
 public:
  using Error::Error;
};

// An algorithmic invariant failed at run time. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hrcap
