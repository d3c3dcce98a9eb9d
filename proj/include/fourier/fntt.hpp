#pragma once

#include <cstdint>
#include <optional>

#include "fourier/gf.hpp"
#include "fourier/sequence.hpp"

namespace fourier {

/// Overrides for the parameters build() would otherwise pick canonically.
/// Each value is a residue; build() rejects values that do not satisfy
/// their defining relation.
struct ContextOptions {
    std::optional<std::uint64_t> alpha;   // element of order N
    std::optional<std::uint64_t> sqrt_n;  // a square root of N
    std::optional<std::uint64_t> j;       // a square root of -1
};

/// Validated parameters of a unitary Fourier number theoretic transform of
/// length N over GF(p), plus its transform matrix
/// F[k][n] = (sqrt N)^-1 * alpha^(k n).
class FnttContext {
public:
    /// Defaults: smallest alpha of order N, smaller square root of N, smaller
    /// root of -1 (absent when p = 3 mod 4).
    static FnttContext build(PrimeModulus p, std::size_t n, const ContextOptions& options = {});

    PrimeModulus modulus() const noexcept { return p_; }
    std::size_t length() const noexcept { return n_; }
    Residue alpha() const noexcept { return alpha_; }
    Residue sqrt_n() const noexcept { return sqrt_n_; }
    Residue inv_sqrt_n() const noexcept { return inv_sqrt_n_; }
    const std::optional<Residue>& j() const noexcept { return j_; }
    const Matrix& matrix() const noexcept { return f_; }
    const Matrix& inverse_matrix() const noexcept { return f_inv_; }

    Sequence forward(const Sequence& x) const;
    Sequence inverse(const Sequence& x) const;

    Sequence zero() const { return Sequence(p_, n_); }

private:
    FnttContext(PrimeModulus p, std::size_t n, Residue alpha, Residue sqrt_n, std::optional<Residue> j);

    PrimeModulus p_;
    std::size_t n_;
    Residue alpha_;
    Residue sqrt_n_;
    Residue inv_sqrt_n_;
    std::optional<Residue> j_;
    Matrix f_;
    Matrix f_inv_;
};

/// Index of the symmetric partner of i: (N - i) mod N.
inline std::size_t mirror(std::size_t i, std::size_t n) noexcept { return i == 0 ? 0 : n - i; }

/// (x_{(-n) mod N})_n.
Sequence reversal(const Sequence& x);
Sequence even_part(const Sequence& x);
Sequence odd_part(const Sequence& x);
bool is_even(const Sequence& x);
bool is_odd(const Sequence& x);

} // namespace fourier
