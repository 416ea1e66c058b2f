#pragma once

#include <stdexcept>
#include <string>

namespace connperm {

// Every domain error derives from Error so callers can catch the family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  using Error::Error;
};

class Decomposable : public Error {
 public:
  using Error::Error;
};

class SizeTooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class InvalidLabeling : public Error {
 public:
  using Error::Error;
};

class PlacementOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotFpf : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two independent evaluations of the same quantity disagreed. Always a bug.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace connperm
