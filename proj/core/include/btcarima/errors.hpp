#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btcarima {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// series_core
class InvalidSeries : public Error { using Error::Error; };
class NonPositiveValue : public Error { using Error::Error; };
class SeriesTooShort : public Error { using Error::Error; };
class StateMismatch : public Error { using Error::Error; };
class LagTooLarge : public Error { using Error::Error; };
class ZeroVariance : public Error { using Error::Error; };
class DegenerateToeplitz : public Error { using Error::Error; };
class SingularRegression : public Error { using Error::Error; };

// arima_engine
class InvalidOrder : public Error { using Error::Error; };
class InvalidConfig : public Error { using Error::Error; };
class OptimizerFailure : public Error { using Error::Error; };
class WindowTooShort : public Error { using Error::Error; };

// model_grid / eval_harness
class OutOfGrid : public Error { using Error::Error; };
class RegionTooSmall : public Error { using Error::Error; };

// cli_io
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};
class GapError : public Error { using Error::Error; };
class NonPositivePrice : public Error { using Error::Error; };
class NetworkError : public Error {
public:
  NetworkError(int status, const std::string& what) : Error(what), status_(status) {}
  /// HTTP status, or 0 when no response was received.
  [[nodiscard]] int status() const noexcept { return status_; }

private:
  int status_;
};
class MalformedResponse : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

} // namespace btcarima
