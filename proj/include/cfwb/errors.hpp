#pragma once

#include <stdexcept>
#include <string>

namespace cfwb {

/// Base class for recoverable failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem and stream failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Malformed input: broken PGM or container bytes, inconsistent geometry,
/// parameters outside their documented range.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

} // namespace cfwb
