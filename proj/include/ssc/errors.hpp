#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(const std::string& what, long long index, long long lo, long long hi)
      : Error(what + ": " + std::to_string(index) + " outside [" + std::to_string(lo) + ";" +
              std::to_string(hi) + "]"),
        index(index) {}
  long long index;
};

class DuplicateEntry : public Error {
 public:
  DuplicateEntry(int row_in, int col_in)
      : Error("duplicate entry at (" + std::to_string(row_in) + ", " + std::to_string(col_in) + ")"),
        row(row_in),
        col(col_in) {}
  int row;
  int col;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ExhaustionBoundExceeded : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ssc
