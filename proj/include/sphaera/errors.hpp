#pragma once

#include <stdexcept>
#include <string>

namespace sphaera {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct DegenerateError : Error { using Error::Error; };
struct MismatchError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct ClosureError : Error { using Error::Error; };
struct InvariantError : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };

}  // namespace sphaera
