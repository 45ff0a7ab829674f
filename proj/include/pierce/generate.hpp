#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pierce/instance.hpp"

namespace pierce {

enum class GeneratorKind {
    UniformSquare,   // i.i.d. uniform on the unit square
    Gaussian,        // i.i.d. standard normal
    Clustered,       // tight normal blobs around a few uniform centers
    CircleBoundary,  // points exactly on a common circle
};

const char* to_string(GeneratorKind kind);
std::optional<GeneratorKind> generator_from_string(std::string_view name);

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 1;
    int n_min = 2;
    int n_max = 64;
    GeneratorKind generator = GeneratorKind::UniformSquare;
    Tolerance tol{};
};

// Throws Error unless trials >= 1 and 2 <= n_min <= n_max.
void validate_config(const RunConfig& config);

// Deterministic: trial k of a given (seed, config) is always the same
// instance, independent of the other trials, so batches can run in any
// order or in parallel.  For n >= 3 the circle-boundary generator pins the
// circle with three spread anchor angles, making the enclosing circle equal
// the generating circle by construction.
Instance generate_instance(const RunConfig& config, int trial_index);

}  // namespace pierce
