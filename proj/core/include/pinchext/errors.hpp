#pragma once

#include <stdexcept>
#include <string>

namespace pinchext {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition or domain violation (bad argument, point outside a domain).
class DomainError : public Error {
public:
    using Error::Error;
};

// Grid too coarse for the Laurent bandwidth of the data.
class BandwidthError : public Error {
public:
    using Error::Error;
};

// Function vanishes (within tolerance) on the circle where a winding is asked for.
class VanishingError : public Error {
public:
    using Error::Error;
};

// Pole found on or outside the admissible disc, or evaluation too close to a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Numerical refinement or limit process did not settle.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Ladder level carries more poles than the admissible budget.
class PoleCountError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

} // namespace pinchext
