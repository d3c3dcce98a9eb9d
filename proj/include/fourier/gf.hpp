#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>

#include "fourier/error.hpp"

namespace fourier {

bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p < 2^32, so that products of two residues fit in 64 bits.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    std::uint64_t reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    // Raw arithmetic on already-reduced values.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    std::uint64_t p_;
};

/// An element of GF(p). Always reduced into [0, p).
class Residue {
public:
    Residue(std::int64_t v, PrimeModulus m) : v_(m.reduce(v)), m_(m) {}

    std::uint64_t value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return m_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend Residue operator+(Residue a, Residue b);
    friend Residue operator-(Residue a, Residue b);
    friend Residue operator*(Residue a, Residue b);
    friend Residue operator-(Residue a);

    friend bool operator==(Residue a, Residue b) noexcept { return a.v_ == b.v_ && a.m_ == b.m_; }

private:
    static Residue raw(std::uint64_t v, PrimeModulus m) {
        Residue r{0, m};
        r.v_ = v;
        return r;
    }
    friend Residue inv(Residue a);
    friend Residue pow(Residue a, std::uint64_t e);

    std::uint64_t v_;
    PrimeModulus m_;
};

std::ostream& operator<<(std::ostream& os, Residue r);

Residue inv(Residue a);
Residue pow(Residue a, std::uint64_t e);

/// Both square roots of `a`, smaller representative first; absent for
/// non-residues. sqrt_mod(0) is (0, 0).
std::optional<std::pair<Residue, Residue>> sqrt_mod(Residue a);

/// Multiplicative order of a nonzero residue.
std::uint64_t multiplicative_order(Residue a);

/// Smallest residue of multiplicative order exactly n; absent when n does not divide p-1.
std::optional<Residue> element_of_order(std::uint64_t n, PrimeModulus p);

/// Euler's criterion; zero counts as a residue.
bool is_quadratic_residue(Residue a);

/// True iff n | p-1 and n is a quadratic residue mod p.
bool is_valid_fntt_params(PrimeModulus p, std::uint64_t n);

} // namespace fourier
