#pragma once

#include <stdexcept>
#include <string>

namespace mcb {

// Base of all library exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or contract violation (bad alpha, size mismatch, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV input; the message names the offending row/column.
class CsvError : public Error {
 public:
  using Error::Error;
};

// Numerical failure during fitting or resampling.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ConstantColumn : public NumericError {
 public:
  ConstantColumn(int column, const std::string& name)
      : NumericError("column " + (name.empty() ? std::to_string(column) : name) +
                     " has zero variance"),
        column(column) {}
  int column;
};

class RankDeficient : public NumericError {
 public:
  explicit RankDeficient(const std::string& what) : NumericError(what) {}
};

class NoConvergence : public NumericError {
 public:
  explicit NoConvergence(const std::string& what) : NumericError(what) {}
};

class FoldTooSmall : public ConfigError {
 public:
  explicit FoldTooSmall(const std::string& what) : ConfigError(what) {}
};

class ReplicateFailed : public NumericError {
 public:
  ReplicateFailed(int replicate, const std::string& cause)
      : NumericError("bootstrap replicate " + std::to_string(replicate) +
                     " failed after retries: " + cause),
        replicate(replicate) {}
  int replicate;
};

class NotNested : public ConfigError {
 public:
  explicit NotNested(const std::string& what) : ConfigError(what) {}
};

class TooLarge : public ConfigError {
 public:
  explicit TooLarge(const std::string& what) : ConfigError(what) {}
};

class WidthTooLarge : public ConfigError {
 public:
  explicit WidthTooLarge(const std::string& what) : ConfigError(what) {}
};

class TooManyPredictors : public ConfigError {
 public:
  explicit TooManyPredictors(const std::string& what) : ConfigError(what) {}
};

}  // namespace mcb
