#ifndef TURANLAB_ERRORS_HPP
#define TURANLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace turanlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyRoots : Error {
    EmptyRoots() : Error("root list is empty") {}
};

struct RootOutOfClass : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct ClassMismatch : Error {
    using Error::Error;
};

struct QuadratureNoConvergence : Error {
    using Error::Error;
};

struct ObjectiveFailure : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

} // namespace turanlab

#endif
