#ifndef HDX_ERROR_HPP
#define HDX_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdx {

/// Bad input: ring mismatch, improper ideal, violated preconditions.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in ideal or series text. position is a byte offset.
class ParseError : public InvalidInput {
public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace hdx

#endif
