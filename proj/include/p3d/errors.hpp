#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p3d {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg), pos_(0) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Invalid mathematical input or violated precondition.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Step limit exceeded in a Groebner computation or similar bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed (two routes disagree).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace p3d
