#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace crest {

// Base for every error raised by the toolkit. Callers that only care about
// "user gave us something bad" vs "the data is bad" catch the two subclasses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration, bad flags, unknown adapter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or schema-invalid input data, audit failures.
class DataError : public Error {
 public:
  explicit DataError(std::string code, const std::string& what)
      : Error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A data error tied to a 1-based line of an input file.
class LineError : public DataError {
 public:
  LineError(std::string code, std::size_t line, const std::string& what)
      : DataError(std::move(code),
                  "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace crest
