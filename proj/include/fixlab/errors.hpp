#pragma once

#include <stdexcept>
#include <string>

namespace fixlab {

struct InvalidInstance : std::runtime_error {
  explicit InvalidInstance(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::runtime_error {
  explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fixlab
