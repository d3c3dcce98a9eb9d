#include "fourier/decode.hpp"

#include <string>

namespace fourier {
namespace {

std::uint64_t signed_copy(const FourierCode& code, std::uint64_t v) {
    return code.eigenvalue().symmetry_sign() > 0 ? v : code.modulus().neg(v);
}

void require_word(const FourierCode& code, const Sequence& r) {
    if (r.size() != code.length()) {
        throw Error(ErrorCode::LengthMismatch, "received word of length " + std::to_string(r.size()) +
                                                   " for a code of length " + std::to_string(code.length()));
    }
    if (!(r.modulus() == code.modulus())) throw Error(ErrorCode::ModulusMismatch, "received word modulus differs");
}

void require_pair(const FourierCode& code, std::size_t i) {
    const auto n = code.length();
    if (i < 1 || 2 * i >= n) {
        throw Error(ErrorCode::InvalidParameters,
                    "pair index " + std::to_string(i) + " outside [1, " + std::to_string((n - 1) / 2) + "]");
    }
}

DecodeOutcome failure() { return DecodeOutcome{}; }

/// Tests one candidate; on success builds the outcome.
std::optional<DecodeOutcome> attempt(const FourierCode& code, const Sequence& received, const Sequence& candidate,
                                     DecodeMethod method, std::size_t max_changes, DecodeTrace* trace) {
    const auto& ctx = code.context();
    const auto spectrum = ctx.forward(candidate);
    const bool eigen = spectrum == code.eigenvalue().residue() * candidate;
    const auto changes = hamming_distance(received, candidate);
    const bool accepted = eigen && changes <= max_changes;
    if (trace) trace->push_back({method, candidate, spectrum, accepted});
    if (!accepted) return std::nullopt;
    DecodeOutcome out;
    out.status = changes == 0 ? DecodeStatus::AlreadyCodeword : DecodeStatus::Corrected;
    out.codeword = candidate;
    out.error_vector = received - candidate;
    out.errors_corrected = changes;
    out.method = changes == 0 ? DecodeMethod::None : method;
    return out;
}

/// Position 0 from the DC constraint. Odd words force x_0 = 0.
std::uint64_t dc_position0(const FourierCode& code, const Sequence& r) {
    if (is_imaginary(code.eigenvalue().symbol())) return 0;
    return check_r0(code.context(), code.eigenvalue(), r).value();
}

/// Position N/2 (even N) from the DC constraint, using the current r_0.
/// Odd words force x_{N/2} = 0.
std::uint64_t dc_middle(const FourierCode& code, const Sequence& r) {
    if (is_imaginary(code.eigenvalue().symbol())) return 0;
    const auto& ctx = code.context();
    const auto m = ctx.modulus();
    const auto n = ctx.length();
    const auto factor = m.sub(m.mul(code.eigenvalue().residue().value(), ctx.sqrt_n().value()), 1);
    std::uint64_t rest = 0;
    for (std::size_t t = 1; t < n; ++t)
        if (t != n / 2) rest = m.add(rest, r.raw(t));
    return m.sub(m.mul(r.raw(0), factor), rest);
}

/// Position `pos` from its row of H = [I | P], when pos is a parity position.
std::optional<std::uint64_t> from_parity_row(const FourierCode& code, const Sequence& r, std::size_t pos) {
    const auto red = code.redundancy();
    if (pos >= red) return std::nullopt;
    const auto m = code.modulus();
    const auto& h = code.parity_check();
    std::uint64_t acc = 0;
    for (std::size_t c = red; c < code.length(); ++c) acc = m.add(acc, m.mul(h.at(pos, c), r.raw(c)));
    return m.neg(acc);
}

} // namespace

std::string_view to_string(DecodeStatus s) noexcept {
    switch (s) {
    case DecodeStatus::AlreadyCodeword: return "ALREADY_CODEWORD";
    case DecodeStatus::Corrected: return "CORRECTED";
    case DecodeStatus::Failure: return "FAILURE";
    }
    return "?";
}

std::string_view to_string(DecodeMethod m) noexcept {
    switch (m) {
    case DecodeMethod::None: return "none";
    case DecodeMethod::SingleSymmetric: return "single-symmetric";
    case DecodeMethod::SingleAsymmetric: return "single-asymmetric";
    case DecodeMethod::DoubleSymmetric: return "double-symmetric";
    case DecodeMethod::Algorithm1: return "A1";
    case DecodeMethod::Algorithm2: return "A2";
    case DecodeMethod::Algorithm3: return "A3";
    }
    return "?";
}

Sequence syndrome(const FnttContext& ctx, const Eigenvalue& lam, const Sequence& r) {
    return ctx.forward(r) - lam.residue() * r;
}

Residue check_r0(const FnttContext& ctx, const Eigenvalue& lam, const Sequence& r) {
    const auto p = ctx.modulus();
    const Residue factor = lam.residue() * ctx.sqrt_n() - Residue{1, p};
    if (factor.is_zero()) {
        throw Error(ErrorCode::DegenerateConstraint,
                    "lambda * sqrt(N) = 1: the DC constraint does not determine position 0");
    }
    Residue tail{0, p};
    for (std::size_t t = 1; t < r.size(); ++t) tail = tail + r[t];
    return inv(factor) * tail;
}

Sequence repair_pair(const FourierCode& code, const Sequence& r, std::size_t i) {
    require_word(code, r);
    require_pair(code, i);
    const auto& ctx = code.context();
    const auto m = ctx.modulus();
    const auto n = ctx.length();
    const auto partner = n - i;
    const auto lam = code.eigenvalue();
    Sequence out = r;
    out.set_raw(i, 0);
    out.set_raw(partner, 0);

    if (!is_imaginary(lam.symbol())) {
        // r_i = (lambda sqrt(N) r_0 - sum over j not in {i, N-i}) / 2
        std::uint64_t rest = 0;
        for (std::size_t t = 0; t < n; ++t) rest = m.add(rest, out.raw(t));
        const auto lhs = m.mul(m.mul(lam.residue().value(), ctx.sqrt_n().value()), r.raw(0));
        const auto v = m.mul(m.sub(lhs, rest), m.inv(2));
        out.set_raw(i, v);
        out.set_raw(partner, v);
        return out;
    }

    // Odd pair: r_i = v, r_{N-i} = -v. Solve S(base) + v S(direction) = 0 on
    // the first syndrome row where the direction is nonzero.
    Sequence direction(m, n);
    direction.set_raw(i, 1);
    direction.set_raw(partner, m.neg(1));
    const auto s_dir = syndrome(ctx, lam, direction);
    const auto s_base = syndrome(ctx, lam, out);
    for (std::size_t k = 0; k < n; ++k) {
        if (s_dir.raw(k) == 0) continue;
        const auto v = m.mul(m.neg(s_base.raw(k)), m.inv(s_dir.raw(k)));
        out.set_raw(i, v);
        out.set_raw(partner, m.neg(v));
        return out;
    }
    return r;
}

DecodeOutcome decode_single_symmetric(const FourierCode& code, const Sequence& r, DecodeTrace* trace) {
    require_word(code, r);
    if (auto done = attempt(code, r, r, DecodeMethod::None, 0, nullptr)) return *done;
    const auto n = code.length();

    Sequence c = r;
    c.set_raw(0, dc_position0(code, r));
    if (auto done = attempt(code, r, c, DecodeMethod::SingleSymmetric, 1, trace)) return *done;

    if (n % 2 == 0) {
        c = r;
        c.set_raw(n / 2, dc_middle(code, r));
        if (auto done = attempt(code, r, c, DecodeMethod::SingleSymmetric, 1, trace)) return *done;
    }
    return failure();
}

DecodeOutcome decode_single_asymmetric(const FourierCode& code, const Sequence& r, std::size_t i, DecodeTrace* trace) {
    require_word(code, r);
    require_pair(code, i);
    const auto partner = code.length() - i;

    Sequence c = r;
    c.set_raw(i, signed_copy(code, r.raw(partner)));
    if (auto done = attempt(code, r, c, DecodeMethod::SingleAsymmetric, 1, trace)) return *done;

    c = r;
    c.set_raw(partner, signed_copy(code, r.raw(i)));
    if (auto done = attempt(code, r, c, DecodeMethod::SingleAsymmetric, 1, trace)) return *done;
    return failure();
}

DecodeOutcome decode_double_symmetric(const FourierCode& code, const Sequence& r, DecodeTrace* trace) {
    require_word(code, r);
    if (auto done = attempt(code, r, r, DecodeMethod::None, 0, nullptr)) return *done;
    const auto n = code.length();

    for (std::size_t i = 1; 2 * i < n; ++i) {
        auto c = repair_pair(code, r, i);
        if (n % 2 == 0) {
            if (auto mid = from_parity_row(code, c, n / 2)) c.set_raw(n / 2, *mid);
        }
        if (auto done = attempt(code, r, c, DecodeMethod::DoubleSymmetric, 2, trace)) return *done;
    }

    if (n % 2 == 0) {
        // Errors at 0 and N/2: one position from its parity row, the other
        // from the DC constraint, in both orders.
        Sequence c = r;
        if (auto mid = from_parity_row(code, r, n / 2)) {
            c.set_raw(n / 2, *mid);
            c.set_raw(0, dc_position0(code, c));
            if (auto done = attempt(code, r, c, DecodeMethod::DoubleSymmetric, 2, trace)) return *done;
        }
        c = r;
        if (auto first = from_parity_row(code, r, 0)) {
            c.set_raw(0, *first);
            c.set_raw(n / 2, dc_middle(code, c));
            if (auto done = attempt(code, r, c, DecodeMethod::DoubleSymmetric, 2, trace)) return *done;
        }
    }
    return failure();
}

DecodeOutcome decode_double_a1(const FourierCode& code, const Sequence& r, std::size_t i, DecodeTrace* trace) {
    require_word(code, r);
    require_pair(code, i);
    const auto n = code.length();
    const auto partner = n - i;

    Sequence first = r;
    first.set_raw(i, signed_copy(code, r.raw(partner)));
    Sequence second = r;
    second.set_raw(partner, signed_copy(code, r.raw(i)));

    for (const auto* base : {&first, &second}) {
        Sequence c = *base;
        c.set_raw(0, dc_position0(code, c));
        if (auto done = attempt(code, r, c, DecodeMethod::Algorithm1, 2, trace)) return *done;
    }
    if (n % 2 == 0) {
        for (const auto* base : {&first, &second}) {
            Sequence c = *base;
            c.set_raw(n / 2, dc_middle(code, c));
            if (auto done = attempt(code, r, c, DecodeMethod::Algorithm1, 2, trace)) return *done;
        }
    }
    return failure();
}

DecodeOutcome decode_double_a2(const FourierCode& code, const Sequence& r, std::size_t i, DecodeTrace* trace) {
    require_word(code, r);
    auto c = repair_pair(code, r, i);
    const auto n = code.length();
    if (n % 2 == 0) {
        if (auto mid = from_parity_row(code, c, n / 2)) c.set_raw(n / 2, *mid);
    }
    if (auto done = attempt(code, r, c, DecodeMethod::Algorithm2, 2, trace)) return *done;
    return failure();
}

DecodeOutcome decode_double_a3(const FourierCode& code, const Sequence& r, std::size_t i, std::size_t j,
                               DecodeTrace* trace) {
    require_word(code, r);
    require_pair(code, i);
    require_pair(code, j);
    const auto n = code.length();

    // For each pair: copy the low member over the high one (true) or the
    // high member over the low one (false).
    constexpr std::pair<bool, bool> kOrder[] = {{true, true}, {true, false}, {false, true}, {false, false}};
    for (auto [keep_i, keep_j] : kOrder) {
        Sequence c = r;
        for (auto [idx, keep_low] : {std::pair{i, keep_i}, std::pair{j, keep_j}}) {
            if (keep_low) {
                c.set_raw(n - idx, signed_copy(code, r.raw(idx)));
            } else {
                c.set_raw(idx, signed_copy(code, r.raw(n - idx)));
            }
        }
        if (auto done = attempt(code, r, c, DecodeMethod::Algorithm3, 2, trace)) return *done;
    }
    return failure();
}

std::vector<std::size_t> mismatched_pairs(const FourierCode& code, const Sequence& r) {
    require_word(code, r);
    std::vector<std::size_t> out;
    const auto n = code.length();
    for (std::size_t i = 1; 2 * i < n; ++i) {
        if (r.raw(i) != signed_copy(code, r.raw(n - i))) out.push_back(i);
    }
    return out;
}

DecodeOutcome decode(const FourierCode& code, const Sequence& r, int t_max, DecodeTrace* trace) {
    require_word(code, r);
    if (t_max < 1 || t_max > 2) {
        throw Error(ErrorCode::InvalidParameters, "t_max must be 1 or 2, got " + std::to_string(t_max));
    }
    if (auto done = attempt(code, r, r, DecodeMethod::None, 0, trace)) return *done;

    const auto mismatched = mismatched_pairs(code, r);
    DecodeOutcome out;
    switch (mismatched.size()) {
    case 0:
        out = decode_single_symmetric(code, r, trace);
        if (!out.succeeded() && t_max == 2) out = decode_double_symmetric(code, r, trace);
        break;
    case 1:
        out = decode_single_asymmetric(code, r, mismatched[0], trace);
        if (!out.succeeded() && t_max == 2) out = decode_double_a1(code, r, mismatched[0], trace);
        if (!out.succeeded() && t_max == 2) out = decode_double_a2(code, r, mismatched[0], trace);
        break;
    case 2:
        if (t_max == 2) out = decode_double_a3(code, r, mismatched[0], mismatched[1], trace);
        break;
    default: break;
    }
    return out;
}

} // namespace fourier
