#pragma once

#include <stdexcept>
#include <string>

namespace sing {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file content (bad row, bad number, empty file).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A categorical token that the dataset schema does not know.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Invalid arguments: dimension mismatches, infeasible splits, bad domains.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An objective returned NaN or infinity.
class NonFiniteObjective : public Error {
 public:
  using Error::Error;
};

}  // namespace sing
