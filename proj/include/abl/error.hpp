#ifndef ABL_ERROR_HPP
#define ABL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace abl {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed corpus or treebank input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Learned/gold treebank disagreement (tree count or token sequence).
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Contract violation by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace abl

#endif  // ABL_ERROR_HPP
