#pragma once

#include <stdexcept>
#include <string>

namespace macc {

// Raised when an argument lies outside the domain of an operation
// (memory outside [0, N], empty grids, invalid network triples, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A scheme's file split does not divide the requested file size F.
class SubpacketizationError : public DomainError {
 public:
  explicit SubpacketizationError(const std::string& what) : DomainError(what) {}
};

}  // namespace macc
