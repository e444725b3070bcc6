#ifndef MTQ_COMMON_HPP
#define MTQ_COMMON_HPP

#include <stdexcept>
#include <string>

namespace mtq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad dimension, step size, mode, or rate parameterization.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A limiting-regime or refinement loop failed to stabilize.
class NotConverged : public Error {
public:
  using Error::Error;
};

/// A rate curve has nonpositive period mean; no exponential envelope exists.
class NotErgodic : public Error {
public:
  using Error::Error;
};

/// The stationary linear system has no unique solution.
class SingularSystem : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace mtq

#endif
