#pragma once

#include <stdexcept>
#include <string>

namespace degen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-quasi-unipotent or singular monodromy. `factor` holds the offending
// characteristic polynomial factor when one was isolated.
class InvalidMonodromy : public Error {
 public:
  explicit InvalidMonodromy(const std::string& what, std::string factor = {})
      : Error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class MissingData : public Error {
 public:
  using Error::Error;
};

class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Descriptor validation failure. `path` is a slash-separated field path
// ("/strata/2/chi_top"); `reason` is the violated invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, std::string reason)
      : Error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}
  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }
  ValidationError under(const std::string& prefix) const {
    return ValidationError(prefix + path_, reason_);
  }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace degen
