#pragma once

#include <stdexcept>
#include <string>

namespace pats {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (patterns, tile sets, FSTs, instance files).
class FormatError : public Error {
 public:
  using Error::Error;
};

class NotDirectedError : public Error {
 public:
  NotDirectedError() : Error("tile set is not directed") {}
};

/// An exhaustive search hit its configured limit before finishing.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PackingError : public Error {
 public:
  using Error::Error;
};

class VariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace pats
