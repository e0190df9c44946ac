#pragma once

#include <stdexcept>
#include <string>

namespace rol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class EmptySubspace : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

class NotOrthonormal : public Error {
public:
    using Error::Error;
};

class BlockShapeMismatch : public Error {
public:
    using Error::Error;
};

class PlanInfeasible : public Error {
public:
    using Error::Error;
};

class RolNotSatisfied : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rol
