#pragma once

#include <stdexcept>
#include <string>

namespace f4gvm {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked rational arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

class NotARoot : public Error {
public:
    using Error::Error;
};

// Negative, non-integral or otherwise unusable Dynkin labels.
class InvalidLabels : public Error {
public:
    using Error::Error;
};

// The sign of a linear form cannot be decided for all admissible labels.
class AmbiguousSign : public Error {
public:
    using Error::Error;
};

// Malformed golden data (unknown shorthand atom, bad row arity, ...).
class GoldenDataError : public Error {
public:
    using Error::Error;
};

} // namespace f4gvm
