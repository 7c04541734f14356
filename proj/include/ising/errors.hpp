#pragma once

#include <stdexcept>
#include <string>

namespace ising {

/// Base class for every error surfaced by the simulation library.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad dimensions, parameters, missing fields).
struct ConfigError : SimError {
    using SimError::SimError;
};

/// Lattice cannot be decomposed as requested.
struct PartitionError : SimError {
    using SimError::SimError;
};

/// A relaxation step failed to reach consistency within the iteration guard.
struct DivergenceError : SimError {
    DivergenceError(const std::string& what, long step, long iterations)
        : SimError(what), step(step), iterations(iterations) {}

    long step;
    long iterations;
};

} // namespace ising
