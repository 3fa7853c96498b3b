#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tccss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class SizingError : public Error {
public:
  using Error::Error;
};

/// A matrix entry was NaN or infinite on construction.
class NonFiniteError : public Error {
public:
  using Error::Error;
};

/// LU elimination met a pivot below the relative singularity threshold.
class SingularMatrixError : public Error {
public:
  SingularMatrixError(std::size_t pivot_index, double pivot_modulus);
  std::size_t pivot_index() const noexcept { return pivot_index_; }
  double pivot_modulus() const noexcept { return pivot_modulus_; }

private:
  std::size_t pivot_index_;
  double pivot_modulus_;
};

/// Spectral data or run parameters violate an invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Seed vector with vanishing polarization norm.
class DegenerateSeedError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// RH factor evaluated (numerically) at one of its poles.
class PoleError : public Error {
public:
  PoleError(std::size_t zero_index, const std::string& what);
  std::size_t zero_index() const noexcept { return zero_index_; }

private:
  std::size_t zero_index_;
};

/// Potential has not decayed at the ends of the integration window.
class DomainTooSmallError : public Error {
public:
  using Error::Error;
};

/// Scattering data requested where it has no analytic extension.
class UnsupportedHalfPlaneError : public Error {
public:
  using Error::Error;
};

/// Spectral zero iteration did not converge.
class SearchFailedError : public Error {
public:
  SearchFailedError(const std::string& what, std::vector<std::string> trace);
  const std::vector<std::string>& trace() const noexcept { return trace_; }

private:
  std::vector<std::string> trace_;
};

/// Malformed configuration document; carries the JSON path of the offence.
class ParseError : public Error {
public:
  ParseError(std::string path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

class IoError : public Error {
public:
  using Error::Error;
};

/// A verification check aborted; wraps the module error with the check name.
class CheckError : public Error {
public:
  CheckError(std::string check, const std::string& what)
      : Error(check + ": " + what), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

private:
  std::string check_;
};

}  // namespace tccss
