#pragma once

#include <stdexcept>
#include <string>

namespace arlab {

/// Base of every failure raised by the library. Each subclass maps to one
/// contract violation; the CLI translates them into exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class HorizonTooSmall : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class RateInvalid : public Error {
 public:
  using Error::Error;
};

class RateNotNormalized : public RateInvalid {
 public:
  using RateInvalid::RateInvalid;
};

class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

class DepthCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public Error {
 public:
  using Error::Error;
};

class NotSeparable : public NotRealizable {
 public:
  using NotRealizable::NotRealizable;
};

class BoostingFailed : public Error {
 public:
  using Error::Error;
};

class OriginMissing : public Error {
 public:
  using Error::Error;
};

class Unlearnable : public Error {
 public:
  using Error::Error;
};

/// Malformed class-spec or sample file. `field` names the offending key.
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace arlab
