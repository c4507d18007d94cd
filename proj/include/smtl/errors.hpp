#pragma once

#include <stdexcept>
#include <string>

namespace smtl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingResolution : public Error {
public:
  explicit MissingResolution(int level)
      : Error("no temporal resolution for level " + std::to_string(level)),
        level_(level) {}
  int level() const noexcept { return level_; }

private:
  int level_;
};

class ResolutionViolation : public Error {
public:
  using Error::Error;
};

class LevelMismatch : public Error {
public:
  using Error::Error;
};

class UnknownLevel : public Error {
public:
  explicit UnknownLevel(int level)
      : Error("level " + std::to_string(level) + " is not present in the trace"),
        level_(level) {}
  int level() const noexcept { return level_; }

private:
  int level_;
};

class PositionOutOfRange : public Error {
public:
  using Error::Error;
};

class NotMTL : public Error {
public:
  NotMTL() : Error("formula contains a stratification operator; not an MTL formula") {}
};

class InstanceTooLarge : public Error {
public:
  using Error::Error;
};

class TraceFormatError : public Error {
public:
  using Error::Error;
};

class WorldGenerationFailed : public Error {
public:
  using Error::Error;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace smtl
