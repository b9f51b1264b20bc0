#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed polynomial text; line is 0 when parsing a single string
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : Error(what), column_(column), line_(line) {}
  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

// the input violates a mathematical precondition of the operation
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CoprimalityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class GenericityError : public PreconditionError {
 public:
  GenericityError(const std::string& condition, const std::string& what)
      : PreconditionError(what), condition_(condition) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// something that the theory says cannot happen did happen
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bvs
