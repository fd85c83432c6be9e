#pragma once

#include <stdexcept>
#include <string>

namespace classprod {

// Base for everything this library throws on bad input. Internal consistency
// violations (things that cannot happen for valid groups) use std::logic_error
// instead, so callers can tell user error from harness bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAGroup : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct NotASubgroup : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };

struct NotPrime : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct NotAnAutomorphism : Error { using Error::Error; };
struct NotAnAction : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };

}  // namespace classprod
