#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordalg {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An error carrying a module-specific kind and the element indices that
/// witness it (violating triple, offending block, ...).
template <typename Kind>
class KindedError : public Error {
 public:
  KindedError(Kind kind, std::string message, std::vector<std::size_t> witness = {})
      : Error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace ordalg
