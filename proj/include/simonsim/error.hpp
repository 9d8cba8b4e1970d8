#pragma once

#include <stdexcept>
#include <string>

namespace simonsim {

// Domain-level failure: bad arguments, impossible branches, promise violations.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Resource limits (qubit counts, group sizes).
class CapacityError : public DomainError {
public:
    explicit CapacityError(const std::string& what) : DomainError(what) {}
};

// Forcing a measurement outcome whose Born probability is (numerically) zero.
class ImpossibleBranchError : public DomainError {
public:
    explicit ImpossibleBranchError(const std::string& what) : DomainError(what) {}
};

}  // namespace simonsim
