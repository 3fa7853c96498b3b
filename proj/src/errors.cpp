#include "tccss/errors.hpp"

#include <utility>

namespace tccss {

SingularMatrixError::SingularMatrixError(std::size_t pivot_index, double pivot_modulus)
    : Error("matrix is singular to working precision at pivot " + std::to_string(pivot_index)),
      pivot_index_(pivot_index),
      pivot_modulus_(pivot_modulus) {}

PoleError::PoleError(std::size_t zero_index, const std::string& what)
    : Error(what), zero_index_(zero_index) {}

SearchFailedError::SearchFailedError(const std::string& what, std::vector<std::string> trace)
    : Error(what), trace_(std::move(trace)) {}

ParseError::ParseError(std::string path, const std::string& message)
    : Error(path + ": " + message), path_(std::move(path)) {}

}  // namespace tccss
