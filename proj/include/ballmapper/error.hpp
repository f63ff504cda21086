#pragma once

#include <stdexcept>
#include <string>

namespace ballmapper {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data failed validation (missing columns, empty selections,
// mismatched graph/cloud pairs, malformed CSV rows).
class DataError : public Error {
public:
    using Error::Error;
};

// A file could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

// A caller-supplied parameter is out of its domain (epsilon <= 0,
// window < 2, |r| >= 1, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace ballmapper
