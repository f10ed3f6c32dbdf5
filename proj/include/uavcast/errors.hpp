#pragma once

#include <stdexcept>
#include <string>

namespace uavcast {

/// Base class for all library-specific failures.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parameter set violates a structural relation (e.g. non-integer packet counts).
class invalid_parameters_error : public error {
  public:
    using error::error;
};

/// No geometry can satisfy the radio constraints (e.g. threshold SNR unreachable).
class infeasible_geometry_error : public error {
  public:
    using error::error;
};

/// A cluster's connection region is empty.
class infeasible_cluster_error : public error {
  public:
    using error::error;
};

/// Problem instance admits no feasible solution (e.g. uncovered terminals).
class infeasible_error : public error {
  public:
    using error::error;
};

/// An iterative solver failed to converge within its budget.
class solver_failure_error : public error {
  public:
    using error::error;
};

}  // namespace uavcast
