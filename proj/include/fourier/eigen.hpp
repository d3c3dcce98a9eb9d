#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "fourier/fntt.hpp"

namespace fourier {

/// The four fourth roots of unity that can be eigenvalues of the transform.
enum class EigenSymbol { PlusOne, MinusOne, PlusJ, MinusJ };

inline constexpr std::array<EigenSymbol, 4> kAllEigenSymbols = {
    EigenSymbol::PlusOne, EigenSymbol::MinusOne, EigenSymbol::PlusJ, EigenSymbol::MinusJ};

std::string_view to_string(EigenSymbol s) noexcept;
/// Accepts "+1", "1", "-1", "+j", "j", "-j".
std::optional<EigenSymbol> parse_eigen_symbol(std::string_view text) noexcept;

inline bool is_imaginary(EigenSymbol s) noexcept {
    return s == EigenSymbol::PlusJ || s == EigenSymbol::MinusJ;
}

/// Symbol obtained by negating the eigenvalue (the effect of flipping the
/// sqrt(N) branch).
EigenSymbol negated(EigenSymbol s) noexcept;
/// Symbol obtained by conjugating +j and -j (the effect of relabelling j).
EigenSymbol conjugated(EigenSymbol s) noexcept;

/// An eigenvalue symbol together with its concrete residue in a context.
class Eigenvalue {
public:
    /// Throws InvalidParameters for +-j when the context has no root of -1.
    static Eigenvalue resolve(const FnttContext& ctx, EigenSymbol symbol);

    EigenSymbol symbol() const noexcept { return symbol_; }
    Residue residue() const noexcept { return residue_; }
    /// +1 when eigensequences are even, -1 when they are odd.
    int symmetry_sign() const noexcept { return is_imaginary(symbol_) ? -1 : 1; }

private:
    Eigenvalue(EigenSymbol s, Residue r) : symbol_(s), residue_(r) {}

    EigenSymbol symbol_;
    Residue residue_;
};

bool is_eigensequence(const FnttContext& ctx, const Sequence& x, const Eigenvalue& lam);

/// y = E(x) + sign * E(X); an eigensequence for eigenvalue sign * 1.
Sequence make_even_eigensequence(const FnttContext& ctx, const Sequence& x, int sign);

/// y = O(x) - sign * j * O(X); an eigensequence for eigenvalue sign * j.
Sequence make_odd_eigensequence(const FnttContext& ctx, const Sequence& x, int sign);

/// Tabulated eigenvalue multiplicity for length N, with N = 4m + s.
std::size_t multiplicity(std::size_t n, EigenSymbol s);

/// Tabulated multiplicity with both pairs (+1,-1) and (+j,-j) interchanged,
/// i.e. the profile of the other sqrt(N) branch.
std::size_t branch_swapped_multiplicity(std::size_t n, EigenSymbol s);

/// N - rank(F - lambda I).
std::size_t eigenspace_dimension(const FnttContext& ctx, const Eigenvalue& lam);

/// Which arrangement of the tabulated multiplicities a context realises.
enum class MultiplicityProfile {
    AsTabulated,
    RealPairSwapped,       // +1 and -1 interchanged
    ImaginaryPairSwapped,  // +j and -j interchanged
    BothSwapped,           // both interchanged
};

std::string_view to_string(MultiplicityProfile p) noexcept;

std::size_t profile_multiplicity(std::size_t n, EigenSymbol s, MultiplicityProfile profile);

struct EigenstructureReport {
    std::array<std::size_t, 4> dimensions{};  // indexed like kAllEigenSymbols
    std::optional<MultiplicityProfile> profile;  // absent when no arrangement matches
};

/// Computes all four eigenspace dimensions empirically and identifies the
/// profile. Requires a context with j.
EigenstructureReport analyse_eigenstructure(const FnttContext& ctx);

} // namespace fourier
