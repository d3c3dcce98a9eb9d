#include "fourier/fntt.hpp"

#include <string>

namespace fourier {
namespace {

void require_length(const FnttContext& ctx, const Sequence& x) {
    if (x.size() != ctx.length()) {
        throw Error(ErrorCode::LengthMismatch, "sequence of length " + std::to_string(x.size()) +
                                                   " given to a length-" + std::to_string(ctx.length()) +
                                                   " transform");
    }
    if (!(x.modulus() == ctx.modulus())) {
        throw Error(ErrorCode::ModulusMismatch, "sequence modulus differs from transform modulus");
    }
}

Matrix vandermonde(Residue inv_sqrt_n, Residue root, std::size_t n) {
    const auto m = root.modulus();
    Matrix out(m, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t) {
            out.set(k, t, m.mul(inv_sqrt_n.value(), m.pow(root.value(), (k * t) % n)));
        }
    }
    return out;
}

} // namespace

FnttContext::FnttContext(PrimeModulus p, std::size_t n, Residue alpha, Residue sqrt_n, std::optional<Residue> j)
    : p_(p),
      n_(n),
      alpha_(alpha),
      sqrt_n_(sqrt_n),
      inv_sqrt_n_(inv(sqrt_n)),
      j_(j),
      f_(vandermonde(inv_sqrt_n_, alpha, n)),
      f_inv_(vandermonde(inv_sqrt_n_, inv(alpha), n)) {}

FnttContext FnttContext::build(PrimeModulus p, std::size_t n, const ContextOptions& options) {
    const auto pv = p.value();
    const auto tag = " (p=" + std::to_string(pv) + ", N=" + std::to_string(n) + ")";
    if (n < 2) throw Error(ErrorCode::InvalidParameters, "transform length must be at least 2" + tag);
    if ((pv - 1) % n != 0) {
        throw Error(ErrorCode::InvalidParameters,
                    "N must divide p-1: " + std::to_string(n) + " does not divide " + std::to_string(pv - 1) + tag);
    }
    if (!is_valid_fntt_params(p, n)) {
        throw Error(ErrorCode::InvalidParameters, "N must be a quadratic residue mod p" + tag);
    }

    Residue alpha = *element_of_order(n, p);
    if (options.alpha) {
        Residue a{static_cast<std::int64_t>(*options.alpha % pv), p};
        if (a.is_zero() || multiplicative_order(a) != n) {
            throw Error(ErrorCode::InvalidParameters,
                        "alpha=" + std::to_string(*options.alpha) + " does not have order N" + tag);
        }
        alpha = a;
    }

    Residue n_res{static_cast<std::int64_t>(n), p};
    Residue sqrt_n = sqrt_mod(n_res)->first;
    if (options.sqrt_n) {
        Residue s{static_cast<std::int64_t>(*options.sqrt_n % pv), p};
        if (!(s * s == n_res)) {
            throw Error(ErrorCode::InvalidParameters,
                        "sqrt branch " + std::to_string(*options.sqrt_n) + " does not square to N" + tag);
        }
        sqrt_n = s;
    }

    std::optional<Residue> j;
    if (auto roots = sqrt_mod(Residue{-1, p})) j = roots->first;
    if (options.j) {
        Residue candidate{static_cast<std::int64_t>(*options.j % pv), p};
        if (!(candidate * candidate == Residue{-1, p})) {
            throw Error(ErrorCode::InvalidParameters,
                        "j branch " + std::to_string(*options.j) + " is not a square root of -1" + tag);
        }
        j = candidate;
    }
    return FnttContext(p, n, alpha, sqrt_n, j);
}

Sequence FnttContext::forward(const Sequence& x) const {
    require_length(*this, x);
    return f_ * x;
}

Sequence FnttContext::inverse(const Sequence& x) const {
    require_length(*this, x);
    return f_inv_ * x;
}

Sequence reversal(const Sequence& x) {
    Sequence out = x;
    const auto n = x.size();
    for (std::size_t i = 0; i < n; ++i) out.set_raw(i, x.raw(mirror(i, n)));
    return out;
}

Sequence even_part(const Sequence& x) {
    const Residue half = inv(Residue{2, x.modulus()});
    return half * (x + reversal(x));
}

Sequence odd_part(const Sequence& x) {
    const Residue half = inv(Residue{2, x.modulus()});
    return half * (x - reversal(x));
}

bool is_even(const Sequence& x) { return x == reversal(x); }

bool is_odd(const Sequence& x) {
    const auto m = x.modulus();
    const auto n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (x.raw(i) != m.neg(x.raw(mirror(i, n)))) return false;
    }
    return true;
}

} // namespace fourier
