#include "fourier/eigen.hpp"

#include <cassert>
#include <string>

namespace fourier {

std::string_view to_string(EigenSymbol s) noexcept {
    switch (s) {
    case EigenSymbol::PlusOne: return "+1";
    case EigenSymbol::MinusOne: return "-1";
    case EigenSymbol::PlusJ: return "+j";
    case EigenSymbol::MinusJ: return "-j";
    }
    return "?";
}

std::optional<EigenSymbol> parse_eigen_symbol(std::string_view text) noexcept {
    if (text == "+1" || text == "1") return EigenSymbol::PlusOne;
    if (text == "-1") return EigenSymbol::MinusOne;
    if (text == "+j" || text == "j") return EigenSymbol::PlusJ;
    if (text == "-j") return EigenSymbol::MinusJ;
    return std::nullopt;
}

EigenSymbol negated(EigenSymbol s) noexcept {
    switch (s) {
    case EigenSymbol::PlusOne: return EigenSymbol::MinusOne;
    case EigenSymbol::MinusOne: return EigenSymbol::PlusOne;
    case EigenSymbol::PlusJ: return EigenSymbol::MinusJ;
    case EigenSymbol::MinusJ: return EigenSymbol::PlusJ;
    }
    return s;
}

EigenSymbol conjugated(EigenSymbol s) noexcept { return is_imaginary(s) ? negated(s) : s; }

Eigenvalue Eigenvalue::resolve(const FnttContext& ctx, EigenSymbol symbol) {
    const auto p = ctx.modulus();
    switch (symbol) {
    case EigenSymbol::PlusOne: return {symbol, Residue{1, p}};
    case EigenSymbol::MinusOne: return {symbol, Residue{-1, p}};
    default: break;
    }
    if (!ctx.j()) {
        throw Error(ErrorCode::InvalidParameters,
                    "eigenvalue " + std::string(to_string(symbol)) + " needs a square root of -1, which GF(" +
                        std::to_string(p.value()) + ") lacks (p = 3 mod 4)");
    }
    const Residue j = *ctx.j();
    return {symbol, symbol == EigenSymbol::PlusJ ? j : -j};
}

bool is_eigensequence(const FnttContext& ctx, const Sequence& x, const Eigenvalue& lam) {
    return ctx.forward(x) == lam.residue() * x;
}

Sequence make_even_eigensequence(const FnttContext& ctx, const Sequence& x, int sign) {
    const auto p = ctx.modulus();
    const auto e = even_part(x);
    const auto y = e + Residue{sign >= 0 ? 1 : -1, p} * ctx.forward(e);
    const auto lam = Eigenvalue::resolve(ctx, sign >= 0 ? EigenSymbol::PlusOne : EigenSymbol::MinusOne);
    if (!is_eigensequence(ctx, y, lam)) throw Error(ErrorCode::Internal, "even eigensequence check failed");
    return y;
}

Sequence make_odd_eigensequence(const FnttContext& ctx, const Sequence& x, int sign) {
    const auto lam = Eigenvalue::resolve(ctx, sign >= 0 ? EigenSymbol::PlusJ : EigenSymbol::MinusJ);
    const auto o = odd_part(x);
    // O(x) - lambda * O(X): lambda = +j takes the minus branch.
    const auto y = o - lam.residue() * ctx.forward(o);
    if (!is_eigensequence(ctx, y, lam)) throw Error(ErrorCode::Internal, "odd eigensequence check failed");
    return y;
}

std::size_t multiplicity(std::size_t n, EigenSymbol s) {
    const auto m = static_cast<long>(n / 4);
    long plus_one = m + 1, minus_one = m, minus_j = m, plus_j = m;
    switch (n % 4) {
    case 0: plus_j = m - 1; break;
    case 1: break;
    case 2: minus_one = m + 1; break;
    case 3:
        minus_one = m + 1;
        minus_j = m + 1;
        break;
    }
    long v = 0;
    switch (s) {
    case EigenSymbol::PlusOne: v = plus_one; break;
    case EigenSymbol::MinusOne: v = minus_one; break;
    case EigenSymbol::PlusJ: v = plus_j; break;
    case EigenSymbol::MinusJ: v = minus_j; break;
    }
    assert(v >= 0);
    return v < 0 ? 0 : static_cast<std::size_t>(v);
}

std::size_t branch_swapped_multiplicity(std::size_t n, EigenSymbol s) { return multiplicity(n, negated(s)); }

std::size_t eigenspace_dimension(const FnttContext& ctx, const Eigenvalue& lam) {
    const auto n = ctx.length();
    Matrix a = ctx.matrix();
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, ctx.modulus().sub(a.at(i, i), lam.residue().value()));
    return n - rank(a);
}

std::string_view to_string(MultiplicityProfile p) noexcept {
    switch (p) {
    case MultiplicityProfile::AsTabulated: return "as-tabulated";
    case MultiplicityProfile::RealPairSwapped: return "real-pair-swapped";
    case MultiplicityProfile::ImaginaryPairSwapped: return "imaginary-pair-swapped";
    case MultiplicityProfile::BothSwapped: return "both-swapped";
    }
    return "?";
}

std::size_t profile_multiplicity(std::size_t n, EigenSymbol s, MultiplicityProfile profile) {
    switch (profile) {
    case MultiplicityProfile::AsTabulated: return multiplicity(n, s);
    case MultiplicityProfile::RealPairSwapped: return multiplicity(n, is_imaginary(s) ? s : negated(s));
    case MultiplicityProfile::ImaginaryPairSwapped: return multiplicity(n, conjugated(s));
    case MultiplicityProfile::BothSwapped: return branch_swapped_multiplicity(n, s);
    }
    return 0;
}

EigenstructureReport analyse_eigenstructure(const FnttContext& ctx) {
    EigenstructureReport report;
    for (std::size_t i = 0; i < kAllEigenSymbols.size(); ++i) {
        report.dimensions[i] = eigenspace_dimension(ctx, Eigenvalue::resolve(ctx, kAllEigenSymbols[i]));
    }
    for (auto profile : {MultiplicityProfile::AsTabulated, MultiplicityProfile::RealPairSwapped,
                         MultiplicityProfile::ImaginaryPairSwapped, MultiplicityProfile::BothSwapped}) {
        bool match = true;
        for (std::size_t i = 0; i < kAllEigenSymbols.size(); ++i) {
            match = match && report.dimensions[i] == profile_multiplicity(ctx.length(), kAllEigenSymbols[i], profile);
        }
        if (match) {
            report.profile = profile;
            break;
        }
    }
    return report;
}

} // namespace fourier
