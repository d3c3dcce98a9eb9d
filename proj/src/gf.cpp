#include "fourier/gf.hpp"

#include <string>
#include <vector>

namespace fourier {
namespace {

constexpr std::uint64_t kMaxModulus = 1ull << 32;
constexpr std::uint64_t kExhaustiveSqrtLimit = 1'000'000;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void require_same(PrimeModulus a, PrimeModulus b) {
    if (!(a == b)) {
        throw Error(ErrorCode::ModulusMismatch, "residues over different moduli: " +
                                                    std::to_string(a.value()) + " vs " +
                                                    std::to_string(b.value()));
    }
}

std::uint64_t tonelli_shanks(PrimeModulus m, std::uint64_t a) {
    const auto p = m.value();
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (m.pow(z, (p - 1) / 2) != p - 1) ++z;
    auto c = m.pow(z, q);
    auto x = m.pow(a, (q + 1) / 2);
    auto t = m.pow(a, q);
    auto r = s;
    while (t != 1) {
        std::uint64_t i = 0, t2 = t;
        while (t2 != 1) {
            t2 = m.mul(t2, t2);
            ++i;
        }
        auto b = c;
        for (std::uint64_t k = 0; k + i + 1 < r; ++k) b = m.mul(b, b);
        x = m.mul(x, b);
        c = m.mul(b, b);
        t = m.mul(t, c);
        r = i;
    }
    return x;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= kMaxModulus) {
        throw Error(ErrorCode::NotPrime,
                    "modulus " + std::to_string(p) + " outside supported range [3, 2^32)");
    }
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    }
}

std::uint64_t PrimeModulus::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e != 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
    return pow(a, p_ - 2);
}

Residue operator+(Residue a, Residue b) {
    require_same(a.m_, b.m_);
    return Residue::raw(a.m_.add(a.v_, b.v_), a.m_);
}

Residue operator-(Residue a, Residue b) {
    require_same(a.m_, b.m_);
    return Residue::raw(a.m_.sub(a.v_, b.v_), a.m_);
}

Residue operator*(Residue a, Residue b) {
    require_same(a.m_, b.m_);
    return Residue::raw(a.m_.mul(a.v_, b.v_), a.m_);
}

Residue operator-(Residue a) { return Residue::raw(a.m_.neg(a.v_), a.m_); }

std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value(); }

Residue inv(Residue a) { return Residue::raw(a.m_.inv(a.v_), a.m_); }

Residue pow(Residue a, std::uint64_t e) { return Residue::raw(a.m_.pow(a.v_, e), a.m_); }

bool is_quadratic_residue(Residue a) {
    if (a.is_zero()) return true;
    const auto p = a.modulus().value();
    return a.modulus().pow(a.value(), (p - 1) / 2) == 1;
}

std::optional<std::pair<Residue, Residue>> sqrt_mod(Residue a) {
    const auto m = a.modulus();
    const auto p = m.value();
    if (a.is_zero()) return std::pair{Residue{0, m}, Residue{0, m}};
    if (!is_quadratic_residue(a)) return std::nullopt;

    std::uint64_t b = 0;
    if (p < kExhaustiveSqrtLimit) {
        for (std::uint64_t c = 1; c <= (p - 1) / 2; ++c) {
            if (m.mul(c, c) == a.value()) {
                b = c;
                break;
            }
        }
    } else {
        b = tonelli_shanks(m, a.value());
        if (b > (p - 1) / 2) b = p - b;
    }
    return std::pair{Residue{static_cast<std::int64_t>(b), m},
                     Residue{static_cast<std::int64_t>(p - b), m}};
}

std::uint64_t multiplicative_order(Residue a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative order");
    const auto m = a.modulus();
    auto order = m.value() - 1;
    for (auto q : prime_factors(order)) {
        while (order % q == 0 && m.pow(a.value(), order / q) == 1) order /= q;
    }
    return order;
}

std::optional<Residue> element_of_order(std::uint64_t n, PrimeModulus p) {
    if (n == 0 || (p.value() - 1) % n != 0) return std::nullopt;
    const auto factors = prime_factors(n);
    for (std::uint64_t a = 1; a < p.value(); ++a) {
        if (p.pow(a, n) != 1) continue;
        bool exact = true;
        for (auto q : factors) {
            if (p.pow(a, n / q) == 1) {
                exact = false;
                break;
            }
        }
        if (exact) return Residue{static_cast<std::int64_t>(a), p};
    }
    return std::nullopt;
}

bool is_valid_fntt_params(PrimeModulus p, std::uint64_t n) {
    if (n == 0 || (p.value() - 1) % n != 0) return false;
    return p.pow(n % p.value(), (p.value() - 1) / 2) == 1;
}

} // namespace fourier
