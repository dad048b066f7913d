#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

/// Malformed textual input (rationals, JSON documents, direction lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration exceeded its configured atom/word cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace solenoid
