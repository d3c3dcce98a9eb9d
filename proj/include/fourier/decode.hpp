#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fourier/code.hpp"

namespace fourier {

enum class DecodeStatus { AlreadyCodeword, Corrected, Failure };

enum class DecodeMethod {
    None,
    SingleSymmetric,   // repair of position 0 (or N/2) in a symmetric word
    SingleAsymmetric,  // one mismatched pair, one of its symbols replaced
    DoubleSymmetric,   // a symmetric pair (or 0 and N/2) recomputed
    Algorithm1,        // errors at 0 (or N/2) and one member of a pair
    Algorithm2,        // errors at both members of one mismatched pair
    Algorithm3,        // errors in two different pairs
};

std::string_view to_string(DecodeStatus s) noexcept;
std::string_view to_string(DecodeMethod m) noexcept;

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failure;
    std::optional<Sequence> codeword;
    std::optional<Sequence> error_vector;  // received - codeword
    std::size_t errors_corrected = 0;
    DecodeMethod method = DecodeMethod::None;

    bool succeeded() const noexcept { return status != DecodeStatus::Failure; }
};

/// One candidate tested against the eigensequence condition.
struct DecodeAttempt {
    DecodeMethod method;
    Sequence candidate;
    Sequence spectrum;
    bool accepted;
};

using DecodeTrace = std::vector<DecodeAttempt>;

/// F r - lambda r; zero exactly when r is a codeword.
Sequence syndrome(const FnttContext& ctx, const Eigenvalue& lam, const Sequence& r);

/// Value position 0 must hold, given positions 1..N-1, for the DC row of the
/// transform to satisfy X_0 = lambda x_0. Throws DegenerateConstraint when
/// lambda sqrt(N) = 1.
Residue check_r0(const FnttContext& ctx, const Eigenvalue& lam, const Sequence& r);

/// Recomputes both members of pair (i, N-i) so the word is symmetric and
/// satisfies the DC constraint (for +-1), or so that one transform row is
/// satisfied (for +-j, where the DC row carries no information).
Sequence repair_pair(const FourierCode& code, const Sequence& r, std::size_t i);

DecodeOutcome decode_single_symmetric(const FourierCode& code, const Sequence& r, DecodeTrace* trace = nullptr);
DecodeOutcome decode_single_asymmetric(const FourierCode& code, const Sequence& r, std::size_t i,
                                       DecodeTrace* trace = nullptr);
DecodeOutcome decode_double_symmetric(const FourierCode& code, const Sequence& r, DecodeTrace* trace = nullptr);
DecodeOutcome decode_double_a1(const FourierCode& code, const Sequence& r, std::size_t i, DecodeTrace* trace = nullptr);
DecodeOutcome decode_double_a2(const FourierCode& code, const Sequence& r, std::size_t i, DecodeTrace* trace = nullptr);
DecodeOutcome decode_double_a3(const FourierCode& code, const Sequence& r, std::size_t i, std::size_t j,
                               DecodeTrace* trace = nullptr);

/// Pairs i in [1, (N-1)/2] with r_i != sigma r_{N-i}.
std::vector<std::size_t> mismatched_pairs(const FourierCode& code, const Sequence& r);

/// Tries single-error hypotheses, then (t_max = 2) double-error ones, and
/// returns the first candidate that is a codeword within distance t_max.
DecodeOutcome decode(const FourierCode& code, const Sequence& r, int t_max = 2, DecodeTrace* trace = nullptr);

} // namespace fourier
