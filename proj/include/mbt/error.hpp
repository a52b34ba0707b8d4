#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed corpus text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input parsed cleanly but contained no sentences.
class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("empty corpus") {}
};

/// A caller-supplied parameter is out of its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Arity mismatch, empty case base, empty distribution and similar.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A model file is truncated, corrupt or of an unsupported version.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mbt
