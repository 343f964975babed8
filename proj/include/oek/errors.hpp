#ifndef OEK_ERRORS_HPP
#define OEK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oek {

// Argument outside an operation's domain (zero inverse, non-positive scale,
// degree-0 polynomial where a zero bound is requested, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// NaN or Inf reached octonion arithmetic.
class NonFiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiplication requested with a table that fails the structural checks.
class MalformedTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A polynomial coefficient does not lie in the requested slice R + RI.
class SliceMembershipError : public std::invalid_argument {
 public:
  SliceMembershipError(int index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Malformed polynomial / table documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oek

#endif  // OEK_ERRORS_HPP
