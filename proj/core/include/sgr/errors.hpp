#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EntryOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotWeaklyDecreasing : public Error {
 public:
  using Error::Error;
};

class PartitionTooWide : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgr
