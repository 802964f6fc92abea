#ifndef TACHSIM_ERRORS_HPP
#define TACHSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tachsim {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameters or preconditions violated by the caller.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Runtime numerical guard tripped (truncation, domain, separation, resolution).
class GuardError : public Error {
public:
  explicit GuardError(const std::string& what) : Error(what) {}
};

/// Ensemble statistics unusable (e.g. zero surviving trajectories).
class StatisticsError : public Error {
public:
  explicit StatisticsError(const std::string& what) : Error(what) {}
};

class DomainTooSmallError : public GuardError {
public:
  explicit DomainTooSmallError(const std::string& what) : GuardError(what) {}
};

class IllConditionedPacketError : public GuardError {
public:
  explicit IllConditionedPacketError(const std::string& what) : GuardError(what) {}
};

class TruncationError : public GuardError {
public:
  explicit TruncationError(const std::string& what) : GuardError(what) {}
};

class InconclusiveScatteringError : public GuardError {
public:
  explicit InconclusiveScatteringError(const std::string& what) : GuardError(what) {}
};

class ResolutionError : public GuardError {
public:
  explicit ResolutionError(const std::string& what) : GuardError(what) {}
};

// The step() contract treats a violated stability bound as a configuration
// error; the CLI maps it to the numerical-guard exit code.
class StabilityError : public ConfigError {
public:
  explicit StabilityError(const std::string& what) : ConfigError(what) {}
};

class ExceptionalPointError : public ConfigError {
public:
  explicit ExceptionalPointError(const std::string& what) : ConfigError(what) {}
};

class ComplexBandError : public ConfigError {
public:
  explicit ComplexBandError(const std::string& what) : ConfigError(what) {}
};

class DegenerateStateError : public ConfigError {
public:
  explicit DegenerateStateError(const std::string& what) : ConfigError(what) {}
};

class InsufficientDataError : public ConfigError {
public:
  explicit InsufficientDataError(const std::string& what) : ConfigError(what) {}
};

class ProtocolRegimeError : public ConfigError {
public:
  explicit ProtocolRegimeError(const std::string& what) : ConfigError(what) {}
};

} // namespace tachsim

#endif
