#ifndef DCEARMA_ERRORS_HPP
#define DCEARMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcearma {

// Error taxonomy for the library. Everything derives from std::runtime_error
// so callers can catch broadly; the concrete types exist so tests can assert
// the precise failure mode.

struct NonFiniteCoefficient : std::runtime_error {
    explicit NonFiniteCoefficient(const std::string& what)
        : std::runtime_error("NonFiniteCoefficient: " + what) {}
};

struct BurnInOverflow : std::runtime_error {
    explicit BurnInOverflow(const std::string& what)
        : std::runtime_error("BurnInOverflow: " + what) {}
};

struct BlockTooShort : std::runtime_error {
    explicit BlockTooShort(const std::string& what)
        : std::runtime_error("BlockTooShort: " + what) {}
};

struct InsufficientImpulseLength : std::runtime_error {
    explicit InsufficientImpulseLength(const std::string& what)
        : std::runtime_error("InsufficientImpulseLength: " + what) {}
};

struct IndexBelowThreshold : std::runtime_error {
    explicit IndexBelowThreshold(const std::string& what)
        : std::runtime_error("IndexBelowThreshold: " + what) {}
};

struct DegenerateGrid : std::runtime_error {
    explicit DegenerateGrid(const std::string& what)
        : std::runtime_error("DegenerateGrid: " + what) {}
};

struct SampleStarvation : std::runtime_error {
    explicit SampleStarvation(const std::string& what)
        : std::runtime_error("SampleStarvation: " + what) {}
};

struct InvalidBand : std::runtime_error {
    explicit InvalidBand(const std::string& what)
        : std::runtime_error("InvalidBand: " + what) {}
};

struct AtomAssignmentMismatch : std::runtime_error {
    explicit AtomAssignmentMismatch(const std::string& what)
        : std::runtime_error("AtomAssignmentMismatch: " + what) {}
};

struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what)
        : std::runtime_error("IllConditioned: " + what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what)
        : std::runtime_error("ConfigError: " + what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what)
        : std::runtime_error("DimensionMismatch: " + what) {}
};

} // namespace dcearma

#endif
