#pragma once

#include <stdexcept>
#include <string>

namespace dtc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class TruncationExhausted : public Error {
 public:
  using Error::Error;
};

class RelationReductionError : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtc
