#pragma once

#include <stdexcept>
#include <string>

namespace latrec {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class EnumerationCapExceeded : public Error {
public:
  using Error::Error;
};

class InvalidTask : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Every candidate for the current component was eliminated.
class EmptyCandidateSet : public Error {
public:
  EmptyCandidateSet(const std::string& what, int step)
      : Error(what), step_(step) {}
  int step() const noexcept { return step_; }

private:
  int step_;
};

class RetryLimitExceeded : public Error {
public:
  RetryLimitExceeded(const std::string& what, int failing_step, long long last_n)
      : Error(what), failing_step_(failing_step), last_n_(last_n) {}
  int failing_step() const noexcept { return failing_step_; }
  long long last_n() const noexcept { return last_n_; }

private:
  int failing_step_;
  long long last_n_;
};

/// Two indices of the set map to the same spectrum slot.
class AliasingDetected : public Error {
public:
  using Error::Error;
};

class MissingCTable : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class MissingReference : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class SizeLimit : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace latrec
