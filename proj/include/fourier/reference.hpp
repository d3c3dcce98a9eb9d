#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fourier/eigen.hpp"

namespace fourier::reference {

/// Reference (k, d) for one eigenvalue column; absent for an empty code.
struct ReferenceCell {
    std::size_t k;
    std::size_t d;
};

/// Reference code parameters for N in [3, 12], columns ordered like
/// kAllEigenSymbols (+1, -1, +j, -j).
std::optional<std::array<std::optional<ReferenceCell>, 4>> reference_parameters(std::size_t n);

struct ExampleResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Re-derives every worked example (transform, even/odd parts, code
/// matrices, decoding walk-throughs) and compares with the reference values.
std::vector<ExampleResult> run_worked_examples();

} // namespace fourier::reference
