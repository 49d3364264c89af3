#pragma once

#include <stdexcept>
#include <string>

namespace swsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text had no sentence after segmentation.
class EmptyDocument : public Error {
 public:
  using Error::Error;
};

// Annotated JSON does not follow the expected layout.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class DuplicateSentenceIndex : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

}  // namespace swsum
