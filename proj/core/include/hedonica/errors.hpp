#ifndef HEDONICA_ERRORS_HPP
#define HEDONICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hedonica {

/// An exhaustive scan would exceed its configured size bound.
class CapExceeded : public std::length_error
{
public:
  using std::length_error::length_error;
};

/// Input is well-formed but violates an operation's precondition
/// (wrong representation kind, non-symmetric matrix, player outside a coalition, ...).
class PreconditionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hedonica

#endif  // HEDONICA_ERRORS_HPP
