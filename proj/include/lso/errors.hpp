#pragma once

#include <stdexcept>
#include <string>

namespace lso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Points or coordinate lists of different dimension were mixed.
class ArityError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Construction parameters exceed a configured cap.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Internal bookkeeping disagreed with itself. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lso
