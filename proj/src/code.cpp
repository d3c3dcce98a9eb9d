#include "fourier/code.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace fourier {

FourierCode::FourierCode(FnttContext ctx, Eigenvalue lam, Matrix h, Matrix g)
    : ctx_(std::move(ctx)), lam_(lam), h_(std::move(h)), g_(std::move(g)), d_bound_(0) {
    d_bound_ = dmin_bound(*this);
}

FourierCode FourierCode::construct(const FnttContext& ctx, EigenSymbol symbol) {
    const auto lam = Eigenvalue::resolve(ctx, symbol);
    const auto p = ctx.modulus();
    const auto n = ctx.length();

    Matrix shifted = ctx.matrix();
    for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, p.sub(shifted.at(i, i), lam.residue().value()));
    auto [h, pivots] = reduced_row_echelon(shifted);
    const auto r = pivots.size();
    const auto k = n - r;
    if (k == 0) {
        throw Error(ErrorCode::EmptyCode, "eigenvalue " + std::string(to_string(symbol)) + " has multiplicity 0 for N=" +
                                              std::to_string(n) + " over GF(" + std::to_string(p.value()) +
                                              "): empty code");
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (pivots[i] != i) {
            std::string list;
            for (auto c : pivots) list += (list.empty() ? "" : ",") + std::to_string(c);
            throw Error(ErrorCode::PivotStructure,
                        "pivot columns [" + list + "] do not form the leading block; no standard form");
        }
    }

    Matrix g(p, k, n);
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t i = 0; i < r; ++i) g.set(t, i, p.neg(h.at(i, r + t)));
        g.set(t, r + t, 1);
    }
    if (!(g * h.transpose()).is_zero()) throw Error(ErrorCode::Internal, "G H^T is not zero");
    return FourierCode(ctx, lam, std::move(h), std::move(g));
}

Matrix FourierCode::parity_block() const {
    const auto r = redundancy();
    const auto k = dimension();
    Matrix out(modulus(), r, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < k; ++c) out.set(i, c, h_.at(i, r + c));
    return out;
}

FourierCode FourierCode::with_exact_distance(unsigned workers) const {
    return with_exact_distance(dmin_exact(*this, workers));
}

FourierCode FourierCode::with_exact_distance(std::size_t d) const {
    FourierCode out = *this;
    out.d_exact_ = d;
    return out;
}

Sequence FourierCode::encode(const Sequence& message) const {
    if (message.size() != dimension()) {
        throw Error(ErrorCode::LengthMismatch, "message of length " + std::to_string(message.size()) +
                                                   " for a code of dimension " + std::to_string(dimension()));
    }
    if (!(message.modulus() == modulus())) throw Error(ErrorCode::ModulusMismatch, "message modulus differs");
    return g_.transpose() * message;
}

bool FourierCode::contains(const Sequence& word) const { return (h_ * word).is_zero(); }

std::size_t dmin_bound(const FourierCode& code) {
    const auto n = static_cast<long>(code.length());
    const auto k = static_cast<long>(code.dimension());
    // Odd codewords vanish at 0 (and N/2) and are fixed by positions 1..h,
    // so Singleton on that half gives d <= 2 (h - k + 1).
    const long h = (n - 1) / 2;
    const long bound = is_imaginary(code.eigenvalue().symbol()) ? 2 * (h - k + 1) : n - 2 * k + 2;
    return static_cast<std::size_t>(std::max(bound, 0L));
}

std::size_t dmin_exact(const FourierCode& code, unsigned workers, std::uint64_t limit) {
    const auto m = code.modulus();
    const auto p = m.value();
    const auto k = code.dimension();
    const auto n = code.length();

    // Projective enumeration: the first nonzero message symbol is 1.
    // Block l holds messages with leading one at l; it has p^(k-1-l) entries.
    std::uint64_t space = 1;
    for (std::size_t t = 0; t < k; ++t) {
        if (space > limit / p) {
            throw Error(ErrorCode::SearchTooLarge, "p^k = " + std::to_string(p) + "^" + std::to_string(k) +
                                                       " exceeds the distance search limit of " + std::to_string(limit));
        }
        space *= p;
    }
    std::vector<std::uint64_t> block_size(k);
    std::uint64_t total = 0;
    for (std::size_t l = k, size = 1; l-- > 0; size *= p) {
        block_size[l] = size;
        total += size;
    }

    const auto& g = code.generator();
    auto search = [&](std::uint64_t begin, std::uint64_t end, std::size_t best) {
        std::vector<std::uint64_t> word(n);
        std::vector<std::uint64_t> digits(k);
        for (auto index = begin; index < end; ++index) {
            std::size_t lead = 0;
            auto rem = index;
            while (rem >= block_size[lead]) rem -= block_size[lead++];
            std::fill(digits.begin(), digits.end(), 0);
            digits[lead] = 1;
            for (std::size_t t = k; t-- > lead + 1;) {
                digits[t] = rem % p;
                rem /= p;
            }
            std::size_t weight = 0;
            for (std::size_t c = 0; c < n && weight < best; ++c) {
                std::uint64_t acc = 0;
                for (std::size_t t = lead; t < k; ++t) acc = m.add(acc, m.mul(digits[t], g.at(t, c)));
                weight += acc != 0;
            }
            best = std::min(best, weight);
        }
        return best;
    };

    workers = std::max(1u, workers);
    if (workers == 1 || total < 4096) return search(0, total, n);

    std::vector<std::size_t> results(workers, n);
    std::vector<std::thread> pool;
    const auto chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const auto begin = std::min<std::uint64_t>(total, w * chunk);
        const auto end = std::min<std::uint64_t>(total, begin + chunk);
        pool.emplace_back([&, w, begin, end] { results[w] = search(begin, end, n); });
    }
    for (auto& t : pool) t.join();
    return *std::min_element(results.begin(), results.end());
}

std::optional<SecondaryDiagonal> find_secondary_diagonal(const FourierCode& code) {
    const auto pblock = code.parity_block();
    const auto k = code.dimension();
    const auto rows = pblock.rows();
    const std::uint64_t entry = is_imaginary(code.eigenvalue().symbol()) ? 1 : code.modulus().value() - 1;
    for (std::size_t w = 0; w + k <= rows; ++w) {
        bool ok = true;
        for (std::size_t t = 0; t < k && ok; ++t) {
            for (std::size_t c = 0; c < k && ok; ++c) {
                ok = pblock.at(w + t, c) == (c == k - 1 - t ? entry : 0);
            }
        }
        if (ok) return SecondaryDiagonal{w, entry};
    }
    return std::nullopt;
}

bool ds_check(const FourierCode& code) { return find_secondary_diagonal(code).has_value(); }

PrimeModulus smallest_valid_prime(std::size_t n, bool need_j, std::uint64_t limit) {
    if (n < 2) throw Error(ErrorCode::InvalidParameters, "transform length must be at least 2");
    for (std::uint64_t p = n + 1; p <= limit; p += n) {
        if (p < 3 || !is_prime(p)) continue;
        if (need_j && p % 4 != 1) continue;
        if (is_valid_fntt_params(PrimeModulus(p), n)) return PrimeModulus(p);
    }
    throw Error(ErrorCode::SearchTooLarge, "no valid prime below " + std::to_string(limit) + " for N=" + std::to_string(n));
}

std::vector<TableRow> parameters_table(std::size_t first, std::size_t last, std::span<const EigenSymbol> symbols,
                                       const TableOptions& options) {
    std::vector<TableRow> rows;
    for (auto n = first; n <= last; ++n) {
        const auto p = smallest_valid_prime(n, true);
        auto ctx = FnttContext::build(p, n);
        if (options.j_branch == JBranch::Larger) {
            ContextOptions larger;
            larger.j = p.value() - ctx.j()->value();
            ctx = FnttContext::build(p, n, larger);
        }
        TableRow row{n, p.value(), ctx.alpha().value(), ctx.sqrt_n().value(), ctx.j()->value(), {}, {}};
        row.profile = analyse_eigenstructure(ctx).profile;
        for (auto s : symbols) {
            TableCell cell;
            cell.symbol = s;
            try {
                const auto code = FourierCode::construct(ctx, s);
                cell.k = code.dimension();
                cell.d_bound = code.distance_bound();
                cell.d_exact = dmin_exact(code, options.workers);
                cell.ds_holds = ds_check(code);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyCode) throw;
            }
            row.cells.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace fourier
