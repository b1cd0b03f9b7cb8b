#pragma once

#include <stdexcept>
#include <string>

namespace goalcast {

// Malformed input file content; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Versioned-file schema or config mismatch.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External transcription/labeling service failures.
class ClientError : public std::runtime_error {
 public:
  enum class Kind { not_configured, timeout, unavailable, bad_reply };
  ClientError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Training loss blew up; the last good checkpoint path is retained.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::string checkpoint)
      : std::runtime_error(what), checkpoint_(std::move(checkpoint)) {}
  const std::string& last_good_checkpoint() const { return checkpoint_; }

 private:
  std::string checkpoint_;
};

}  // namespace goalcast
