#ifndef SWFORGE_ERRORS_HPP
#define SWFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swforge {

// Invalid input or a precondition the caller can fix.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : DomainError(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A check that can only fail if the library itself is wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace swforge

#endif  // SWFORGE_ERRORS_HPP
