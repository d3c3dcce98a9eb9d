#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "fourier/decode.hpp"

namespace fourier {

struct SimConfig {
    int injected_weight = 1;  // 0, 1 or 2 symbol errors per trial
    int t_max = 2;            // decoder correction capability
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct SimReport {
    std::uint64_t trials = 0;
    int injected_weight = 0;
    int t_max = 0;
    std::uint64_t corrected = 0;      // decoded to the transmitted codeword
    std::uint64_t already_codeword = 0;  // subset of corrected with nothing to fix
    std::uint64_t miscorrected = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::string generator;
    std::chrono::duration<double> elapsed{};

    /// Equality of everything except wall-clock time.
    bool same_counts(const SimReport& other) const noexcept;
};

/// Monte-Carlo channel: uniform random codeword, `injected_weight` distinct
/// uniform positions, uniform nonzero error values. Each trial draws from its
/// own generator seeded by (seed, trial index), so the report does not depend
/// on the worker count.
SimReport simulate(const FourierCode& code, const SimConfig& config);

std::string to_structured(const SimReport& report, int indent = 2);

} // namespace fourier
