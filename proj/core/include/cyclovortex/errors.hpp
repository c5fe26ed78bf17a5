#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cyclovortex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The cyclotron frequency vanishes, so no finite orbit exists.
class ZeroFieldError : public Error {
  public:
    explicit ZeroFieldError(const std::string& what = "cyclotron frequency is zero (B = 0)")
        : Error(what) {}
};

class InvalidStepError : public Error {
  public:
    using Error::Error;
};

class BadDistributionError : public Error {
  public:
    using Error::Error;
};

/// The requested quantity is undefined for this geometry (e.g. azimuth of a
/// particle resting on the axis).
class DegenerateError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line, std::string key)
        : Error(what), line_(line), key_(std::move(key)) {}

    int line() const { return line_; }
    const std::string& key() const { return key_; }

  private:
    int line_;
    std::string key_;
};

class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace cyclovortex
