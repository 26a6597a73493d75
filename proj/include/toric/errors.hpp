#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgorithmFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInCatalog : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDecidable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace toric
