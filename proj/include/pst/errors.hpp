#ifndef PST_ERRORS_HPP
#define PST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pst
{

/// Caller violated a precondition (mismatched parents, non-normal subgroup, ...).
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input data such as a non-bijective permutation.
class validation_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (closure size, lattice order) was exceeded.
class size_limit_error : public std::length_error
{
public:
  size_limit_error(std::string const &what, std::size_t offending)
    : std::length_error(what), offending_(offending)
  {}

  std::size_t offending() const { return offending_; }

private:
  std::size_t offending_;
};

/// Syntax error in a group file; line and column are 1-based.
class parse_error : public std::runtime_error
{
public:
  parse_error(std::string const &msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      message_(msg), line_(line), column_(column)
  {}

  std::string const &message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace pst

#endif // PST_ERRORS_HPP
