#include "fourier/reference.hpp"

#include <functional>

#include "fourier/decode.hpp"

namespace fourier::reference {
namespace {

using Cell = std::optional<ReferenceCell>;
using Row = std::array<Cell, 4>;

// N = 3 .. 12
const std::array<Row, 10> kReference = {{
    {ReferenceCell{1, 3}, ReferenceCell{1, 3}, std::nullopt, ReferenceCell{1, 2}},
    {ReferenceCell{2, 2}, ReferenceCell{1, 4}, std::nullopt, ReferenceCell{1, 2}},
    {ReferenceCell{2, 3}, ReferenceCell{1, 5}, ReferenceCell{1, 4}, ReferenceCell{1, 4}},
    {ReferenceCell{2, 4}, ReferenceCell{2, 4}, ReferenceCell{1, 4}, ReferenceCell{1, 4}},
    {ReferenceCell{2, 5}, ReferenceCell{2, 5}, ReferenceCell{1, 6}, ReferenceCell{2, 4}},
    {ReferenceCell{3, 4}, ReferenceCell{2, 4}, ReferenceCell{1, 6}, ReferenceCell{2, 4}},
    {ReferenceCell{3, 3}, ReferenceCell{2, 6}, ReferenceCell{2, 6}, ReferenceCell{2, 6}},
    {ReferenceCell{3, 6}, ReferenceCell{3, 6}, ReferenceCell{2, 6}, ReferenceCell{2, 6}},
    {ReferenceCell{3, 7}, ReferenceCell{3, 7}, ReferenceCell{2, 8}, ReferenceCell{3, 6}},
    {ReferenceCell{4, 4}, ReferenceCell{3, 6}, ReferenceCell{3, 4}, ReferenceCell{2, 6}},
}};

std::string describe(const Sequence& got, const Sequence& want) {
    return "got " + got.to_string() + ", expected " + want.to_string();
}

ExampleResult check(std::string name, const std::function<std::string()>& body) {
    try {
        auto failure = body();
        return {std::move(name), failure.empty(), failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, e.what()};
    }
}

std::string expect_seq(const std::string& what, const Sequence& got, const Sequence& want) {
    return got == want ? "" : what + ": " + describe(got, want);
}

std::string expect_matrix(const std::string& what, const Matrix& got, const Matrix& want) {
    return got == want ? "" : what + " differs";
}

std::string first_failure(std::initializer_list<std::string> items) {
    for (const auto& s : items)
        if (!s.empty()) return s;
    return "";
}

std::vector<Sequence> spectra_of(const DecodeTrace& trace, DecodeMethod method) {
    std::vector<Sequence> out;
    for (const auto& a : trace)
        if (a.method == method) out.push_back(a.spectrum);
    return out;
}

std::vector<Sequence> candidates_of(const DecodeTrace& trace, DecodeMethod method) {
    std::vector<Sequence> out;
    for (const auto& a : trace)
        if (a.method == method) out.push_back(a.candidate);
    return out;
}

} // namespace

std::optional<Row> reference_parameters(std::size_t n) {
    if (n < 3 || n > 12) return std::nullopt;
    return kReference[n - 3];
}

std::vector<ExampleResult> run_worked_examples() {
    std::vector<ExampleResult> results;

    results.push_back(check("GF(5) N=4: transform, even/odd parts, eigensequences", [] {
        const PrimeModulus p(5);
        const auto ctx = FnttContext::build(p, 4);
        const Sequence x(p, {4, 2, 1, 4});
        const auto big_x = ctx.forward(x);
        const auto y1 = make_even_eigensequence(ctx, x, +1);
        const auto y2 = make_odd_eigensequence(ctx, x, +1);
        return first_failure({
            expect_matrix("F", ctx.matrix(), Matrix(p, {{3, 3, 3, 3}, {3, 1, 2, 4}, {3, 2, 3, 2}, {3, 4, 2, 1}})),
            expect_seq("X", big_x, Sequence(p, {3, 2, 2, 1})),
            expect_seq("E(x)", even_part(x), Sequence(p, {4, 3, 1, 3})),
            expect_seq("E(X)", even_part(big_x), Sequence(p, {3, 4, 2, 4})),
            expect_seq("O(x)", odd_part(x), Sequence(p, {0, 4, 0, 1})),
            expect_seq("O(X)", odd_part(big_x), Sequence(p, {0, 3, 0, 2})),
            expect_seq("y1", y1, Sequence(p, {2, 2, 3, 2})),
            expect_seq("y2", y2, Sequence(p, {0, 3, 0, 2})),
            ctx.j()->value() == 2 ? "" : "j != 2",
        });
    }));

    results.push_back(check("GF(41) N=5: parity-check and generator matrices", [] {
        const PrimeModulus p(41);
        const auto ctx = FnttContext::build(p, 5);
        const auto c1 = FourierCode::construct(ctx, EigenSymbol::PlusOne);
        const auto cm1 = FourierCode::construct(ctx, EigenSymbol::MinusOne);
        const auto cj = FourierCode::construct(ctx, EigenSymbol::PlusJ);
        const auto cmj = FourierCode::construct(ctx, EigenSymbol::MinusJ);
        return first_failure({
            expect_matrix("H(1)", c1.parity_check(), Matrix(p, {{1, 0, 0, 34, 34}, {0, 1, 0, 0, 40}, {0, 0, 1, 40, 0}})),
            expect_matrix("H(-1)", cm1.parity_check(),
                          Matrix(p, {{1, 0, 0, 0, 12}, {0, 1, 0, 0, 40}, {0, 0, 1, 0, 40}, {0, 0, 0, 1, 40}})),
            expect_matrix("H(j)", cj.parity_check(),
                          Matrix(p, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 31}, {0, 0, 0, 1, 10}})),
            expect_matrix("H(-j)", cmj.parity_check(),
                          Matrix(p, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 37}, {0, 0, 0, 1, 4}})),
            expect_matrix("G(1)", c1.generator(), Matrix(p, {{7, 0, 1, 1, 0}, {7, 1, 0, 0, 1}})),
            expect_matrix("G(-1)", cm1.generator(), Matrix(p, {{29, 1, 1, 1, 1}})),
            expect_matrix("G(j)", cj.generator(), Matrix(p, {{0, 40, 10, 31, 1}})),
            expect_matrix("G(-j)", cmj.generator(), Matrix(p, {{0, 40, 4, 37, 1}})),
        });
    }));

    results.push_back(check("GF(17) N=8: parity-check matrices and secondary diagonals", [] {
        const PrimeModulus p(17);
        const auto ctx = FnttContext::build(p, 8);
        const auto c1 = FourierCode::construct(ctx, EigenSymbol::PlusOne);
        const auto cj = FourierCode::construct(ctx, EigenSymbol::PlusJ);
        const auto d1 = find_secondary_diagonal(c1);
        const auto dj = find_secondary_diagonal(cj);
        return first_failure({
            expect_matrix("H(1)", c1.parity_check(),
                          Matrix(p, {{1, 0, 0, 0, 0, 3, 5, 3},
                                     {0, 1, 0, 0, 0, 0, 0, 16},
                                     {0, 0, 1, 0, 0, 0, 16, 0},
                                     {0, 0, 0, 1, 0, 16, 0, 0},
                                     {0, 0, 0, 0, 1, 14, 5, 14}})),
            // Rows 2 and 3 follow the parity equations c2 + k2 = 0, c3 + k1 = 0.
            expect_matrix("H(j)", cj.parity_check(),
                          Matrix(p, {{1, 0, 0, 0, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 0, 1},
                                     {0, 0, 1, 0, 0, 0, 1, 0},
                                     {0, 0, 0, 1, 0, 0, 6, 1},
                                     {0, 0, 0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 0, 1, 11, 16}})),
            d1 && d1->entry == 16 ? "" : "no secondary diagonal with entry 16 in H(1)",
            dj && dj->entry == 1 ? "" : "no secondary diagonal with entry 1 in H(j)",
        });
    }));

    results.push_back(check("GF(29) N=7: A1 fails, A2 corrects", [] {
        const PrimeModulus p(29);
        const auto ctx = FnttContext::build(p, 7);
        const auto code = FourierCode::construct(ctx, EigenSymbol::PlusOne);
        const Sequence r(p, {16, 2, 1, 10, 10, 1, 3});
        DecodeTrace a1;
        const auto first = decode_double_a1(code, r, 1, &a1);
        const auto cand = candidates_of(a1, DecodeMethod::Algorithm1);
        const auto spec = spectra_of(a1, DecodeMethod::Algorithm1);
        if (first.succeeded()) return std::string("Algorithm 1 unexpectedly succeeded");
        if (cand.size() < 2) return std::string("Algorithm 1 tried fewer than two candidates");
        DecodeTrace a2;
        const auto second = decode_double_a2(code, r, 1, &a2);
        const auto full = decode(code, r, 2);
        return first_failure({
            expect_matrix("G(1)", code.generator(), Matrix(p, {{16, 0, 1, 10, 10, 1, 0}, {20, 1, 0, 20, 20, 0, 1}})),
            expect_seq("r(1)", cand[0], Sequence(p, {23, 3, 1, 10, 10, 1, 3})),
            expect_seq("R(1)", spec[0], Sequence(p, {23, 22, 25, 25, 25, 25, 22})),
            expect_seq("r(2)", cand[1], Sequence(p, {11, 2, 1, 10, 10, 1, 2})),
            expect_seq("R(2)", spec[1], Sequence(p, {11, 5, 17, 20, 20, 17, 5})),
            second.succeeded() ? "" : "Algorithm 2 failed",
            second.succeeded() ? expect_seq("A2 result", *second.codeword, Sequence(p, {16, 0, 1, 10, 10, 1, 0})) : "",
            full.method == DecodeMethod::Algorithm2 ? "" : "decoder did not finish via Algorithm 2",
        });
    }));

    results.push_back(check("GF(29) N=7: A3 corrects on the fourth substitution", [] {
        const PrimeModulus p(29);
        const auto ctx = FnttContext::build(p, 7);
        const auto code = FourierCode::construct(ctx, EigenSymbol::PlusOne);
        const Sequence r(p, {16, 2, 3, 10, 10, 1, 0});
        DecodeTrace trace;
        const auto out = decode_double_a3(code, r, 1, 2, &trace);
        const auto cand = candidates_of(trace, DecodeMethod::Algorithm3);
        const auto spec = spectra_of(trace, DecodeMethod::Algorithm3);
        if (cand.size() != 4) return std::string("expected four substitution attempts");
        return first_failure({
            expect_seq("r(1)", cand[0], Sequence(p, {16, 2, 3, 10, 10, 3, 2})),
            expect_seq("R(1)", spec[0], Sequence(p, {27, 13, 19, 17, 17, 19, 13})),
            expect_seq("r(2)", cand[1], Sequence(p, {16, 2, 1, 10, 10, 1, 2})),
            expect_seq("R(2)", spec[1], Sequence(p, {7, 1, 13, 16, 16, 13, 1})),
            expect_seq("r(3)", cand[2], Sequence(p, {16, 0, 3, 10, 10, 3, 0})),
            expect_seq("R(3)", spec[2], Sequence(p, {7, 12, 7, 11, 11, 7, 12})),
            expect_seq("r(4)", cand[3], Sequence(p, {16, 0, 1, 10, 10, 1, 0})),
            expect_seq("R(4)", spec[3], Sequence(p, {16, 0, 1, 10, 10, 1, 0})),
            out.succeeded() && out.method == DecodeMethod::Algorithm3 ? "" : "Algorithm 3 did not correct",
        });
    }));

    return results;
}

} // namespace fourier::reference
