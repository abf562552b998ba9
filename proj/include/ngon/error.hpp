#pragma once

#include <stdexcept>
#include <string>

namespace ngon {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A Pachner move does not fit the triangulation it is applied to.
class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Something that must hold by construction did not; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ngon
