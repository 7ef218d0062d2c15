#pragma once

#include <stdexcept>
#include <string>

namespace wbpdn {

/// Invalid argument or malformed input data (CLI exit code 2).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured resource cap (CLI exit code 3).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values encountered during iteration.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A bound was requested whose hypothesis does not hold, so it is not claimed.
class CertificateError : public std::runtime_error {
public:
  explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wbpdn
