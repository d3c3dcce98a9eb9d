#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fourier/eigen.hpp"

namespace fourier {

/// A Fourier code: the lambda-eigenspace of the transform, viewed as a
/// linear block code with H = [I | P] and G = [-P^T | I].
class FourierCode {
public:
    /// Gauss-Jordan reduces F - lambda I without column permutations.
    /// Throws EmptyCode when the eigenspace is trivial and PivotStructure when
    /// the pivots do not occupy the leading columns.
    static FourierCode construct(const FnttContext& ctx, EigenSymbol symbol);

    const FnttContext& context() const noexcept { return ctx_; }
    const Eigenvalue& eigenvalue() const noexcept { return lam_; }
    PrimeModulus modulus() const noexcept { return ctx_.modulus(); }
    std::size_t length() const noexcept { return ctx_.length(); }
    std::size_t dimension() const noexcept { return g_.rows(); }
    std::size_t redundancy() const noexcept { return h_.rows(); }

    const Matrix& parity_check() const noexcept { return h_; }
    const Matrix& generator() const noexcept { return g_; }
    /// The (n-k) x k block P of H.
    Matrix parity_block() const;

    std::size_t distance_bound() const noexcept { return d_bound_; }
    const std::optional<std::size_t>& exact_distance() const noexcept { return d_exact_; }

    /// Copy with the exact minimum distance filled in by enumeration.
    FourierCode with_exact_distance(unsigned workers = 1) const;
    FourierCode with_exact_distance(std::size_t d) const;

    /// Systematic encoding u G; the last k symbols of the result equal u.
    Sequence encode(const Sequence& message) const;

    bool contains(const Sequence& word) const;

private:
    FourierCode(FnttContext ctx, Eigenvalue lam, Matrix h, Matrix g);

    FnttContext ctx_;
    Eigenvalue lam_;
    Matrix h_;
    Matrix g_;
    std::size_t d_bound_;
    std::optional<std::size_t> d_exact_;
};

/// n - 2k + 2 for +-1; for +-j, 2(floor((n-1)/2) - k + 1), which is n - 2k
/// for even n and n - 2k + 1 for odd n.
std::size_t dmin_bound(const FourierCode& code);

inline constexpr std::uint64_t kMaxDistanceSearch = 10'000'000;

/// Minimum Hamming weight over all nonzero codewords. Throws SearchTooLarge
/// when p^k exceeds `limit`.
std::size_t dmin_exact(const FourierCode& code, unsigned workers = 1, std::uint64_t limit = kMaxDistanceSearch);

struct SecondaryDiagonal {
    std::size_t first_row;  // row of P where the k x k window starts
    std::uint64_t entry;    // p-1 for +-1, 1 for +-j
};

/// Locates a k x k window of consecutive rows of P that is an anti-diagonal
/// matrix with constant entry (p-1 for +-1, 1 for +-j).
std::optional<SecondaryDiagonal> find_secondary_diagonal(const FourierCode& code);
bool ds_check(const FourierCode& code);

/// Smallest prime p with N | p-1, N a quadratic residue, and p = 1 mod 4
/// when need_j. Throws SearchTooLarge beyond `limit`.
PrimeModulus smallest_valid_prime(std::size_t n, bool need_j, std::uint64_t limit = 1'000'000);

/// Which root of -1 a table row labels as +j.
enum class JBranch { Smaller, Larger };

struct TableOptions {
    JBranch j_branch = JBranch::Larger;
    unsigned workers = 1;
};

struct TableCell {
    EigenSymbol symbol = EigenSymbol::PlusOne;
    std::size_t k = 0;                   // 0 renders as an absent code
    std::optional<std::size_t> d_exact;
    std::optional<std::size_t> d_bound;
    std::optional<bool> ds_holds;
};

struct TableRow {
    std::size_t n;
    std::uint64_t p;
    std::uint64_t alpha;
    std::uint64_t sqrt_n;
    std::uint64_t j;
    std::vector<TableCell> cells;
    std::optional<MultiplicityProfile> profile;
};

/// One row per N in [first, last], each over smallest_valid_prime(N, true).
std::vector<TableRow> parameters_table(std::size_t first, std::size_t last,
                                       std::span<const EigenSymbol> symbols = kAllEigenSymbols,
                                       const TableOptions& options = {});

} // namespace fourier
