#include <doctest.h>

#include "fourier/code.hpp"
#include "oracles.hpp"
#include "test_contexts.hpp"

using namespace fourier;

namespace {

std::vector<FourierCode> all_codes(std::uint64_t max_p = 41, std::size_t max_n = 12) {
    std::vector<FourierCode> out;
    for (const auto& ctx : testing_contexts::all_valid(max_p, max_n)) {
        for (auto s : kAllEigenSymbols) {
            if (is_imaginary(s) && !ctx.j()) continue;
            try {
                out.push_back(FourierCode::construct(ctx, s));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyCode) throw;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("GF(41) length-5 codes") {
    const PrimeModulus p(41);
    const auto ctx = FnttContext::build(p, 5);
    const auto c1 = FourierCode::construct(ctx, EigenSymbol::PlusOne);
    CHECK(c1.parity_check() == Matrix(p, {{1, 0, 0, 34, 34}, {0, 1, 0, 0, 40}, {0, 0, 1, 40, 0}}));
    CHECK(c1.generator() == Matrix(p, {{7, 0, 1, 1, 0}, {7, 1, 0, 0, 1}}));
    CHECK(c1.dimension() == 2);
    const auto cm1 = FourierCode::construct(ctx, EigenSymbol::MinusOne);
    CHECK(cm1.generator() == Matrix(p, {{29, 1, 1, 1, 1}}));
    CHECK(cm1.dimension() == 1);
}

TEST_CASE("GF(17) length-8 codes") {
    const PrimeModulus p(17);
    const auto ctx = FnttContext::build(p, 8);
    const auto c1 = FourierCode::construct(ctx, EigenSymbol::PlusOne);
    CHECK(c1.dimension() == 3);
    CHECK(c1.parity_check() == Matrix(p, {{1, 0, 0, 0, 0, 3, 5, 3},
                                          {0, 1, 0, 0, 0, 0, 0, 16},
                                          {0, 0, 1, 0, 0, 0, 16, 0},
                                          {0, 0, 0, 1, 0, 16, 0, 0},
                                          {0, 0, 0, 0, 1, 14, 5, 14}}));
    const auto cj = FourierCode::construct(ctx, EigenSymbol::PlusJ);
    CHECK(cj.dimension() == 2);
    CHECK(cj.parity_check() == Matrix(p, {{1, 0, 0, 0, 0, 0, 0, 0},
                                          {0, 1, 0, 0, 0, 0, 0, 1},
                                          {0, 0, 1, 0, 0, 0, 1, 0},
                                          {0, 0, 0, 1, 0, 0, 6, 1},
                                          {0, 0, 0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, 0, 0, 1, 11, 16}}));
}

TEST_CASE("GF(29) length-7 generator") {
    const PrimeModulus p(29);
    const auto code = FourierCode::construct(FnttContext::build(p, 7), EigenSymbol::PlusOne);
    CHECK(code.generator() == Matrix(p, {{16, 0, 1, 10, 10, 1, 0}, {20, 1, 0, 20, 20, 0, 1}}));
}

TEST_CASE("empty code and unavailable eigenvalue") {
    const auto ctx = FnttContext::build(PrimeModulus(5), 4);
    try {
        (void)FourierCode::construct(ctx, EigenSymbol::MinusJ);
        FAIL("expected an empty code");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyCode);
    }
    CHECK_THROWS_AS(FourierCode::construct(FnttContext::build(PrimeModulus(11), 5), EigenSymbol::PlusJ), Error);
}

TEST_CASE("structural invariants of every small code") {
    for (const auto& code : all_codes()) {
        const auto& h = code.parity_check();
        const auto& g = code.generator();
        const auto n = code.length();
        const auto k = code.dimension();
        CAPTURE(code.modulus().value());
        CAPTURE(n);
        CAPTURE(to_string(code.eigenvalue().symbol()));
        CHECK((g * h.transpose()).is_zero());
        for (std::size_t r = 0; r < n - k; ++r)
            for (std::size_t c = 0; c < n - k; ++c) CHECK(h.at(r, c) == (r == c ? 1u : 0u));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) CHECK(g.at(r, n - k + c) == (r == c ? 1u : 0u));
            CHECK(is_eigensequence(code.context(), g.row(r), code.eigenvalue()));
        }
        CHECK(k == eigenspace_dimension(code.context(), code.eigenvalue()));
    }
}

TEST_CASE("eigensequences from the builders lie in the code") {
    std::mt19937_64 rng(17);
    for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{41, 5}, {17, 8}, {29, 7}, {13, 12}, {37, 9}}) {
        const auto ctx = FnttContext::build(PrimeModulus(p), n);
        for (auto s : kAllEigenSymbols) {
            std::optional<FourierCode> code;
            try {
                code = FourierCode::construct(ctx, s);
            } catch (const Error&) {
                continue;
            }
            for (int trial = 0; trial < 100; ++trial) {
                const auto x = oracle::random_sequence(ctx.modulus(), n, rng);
                const auto sign = (s == EigenSymbol::PlusOne || s == EigenSymbol::PlusJ) ? 1 : -1;
                const auto y = is_imaginary(s) ? make_odd_eigensequence(ctx, x, sign) : make_even_eigensequence(ctx, x, sign);
                CHECK(code->contains(y));
            }
        }
    }
}

TEST_CASE("distance bound") {
    const auto c41 = FnttContext::build(PrimeModulus(41), 5);
    CHECK(dmin_bound(FourierCode::construct(c41, EigenSymbol::PlusOne)) == 3);
    CHECK(dmin_bound(FourierCode::construct(c41, EigenSymbol::MinusOne)) == 5);
    const auto c17 = FnttContext::build(PrimeModulus(17), 8, {.j = 13});
    const auto cj = FourierCode::construct(c17, EigenSymbol::PlusJ);
    CHECK(cj.dimension() == 1);
    CHECK(dmin_bound(cj) == 6);
}

TEST_CASE("exact distance") {
    const auto c41 = FnttContext::build(PrimeModulus(41), 5);
    CHECK(dmin_exact(FourierCode::construct(c41, EigenSymbol::MinusOne)) == 5);
    CHECK(dmin_exact(FourierCode::construct(c41, EigenSymbol::PlusOne)) == 3);
    CHECK(dmin_exact(FourierCode::construct(FnttContext::build(PrimeModulus(29), 7), EigenSymbol::PlusOne)) == 5);
    CHECK(dmin_exact(FourierCode::construct(FnttContext::build(PrimeModulus(17), 8), EigenSymbol::PlusOne)) == 4);

    const auto big = FourierCode::construct(FnttContext::build(PrimeModulus(89), 11), EigenSymbol::PlusOne);
    CHECK_THROWS_AS(dmin_exact(big, 1, 1000), Error);
    CHECK(dmin_exact(big, 4) == dmin_exact(big, 1));
}

TEST_CASE("exact distance matches full enumeration and respects the bound") {
    for (const auto& code : all_codes(41, 9)) {
        const auto p = code.modulus().value();
        std::uint64_t space = 1;
        for (std::size_t t = 0; t < code.dimension(); ++t) space *= p;
        if (space > 200'000) continue;
        const auto d = dmin_exact(code);
        CHECK(d == oracle::min_distance_by_enumeration(code));
        CHECK(d <= code.distance_bound());
    }
}

TEST_CASE("systematic encoding") {
    const PrimeModulus p41(41);
    const auto c1 = FourierCode::construct(FnttContext::build(p41, 5), EigenSymbol::PlusOne);
    CHECK(c1.encode(Sequence(p41, {1, 0})) == Sequence(p41, {7, 0, 1, 1, 0}));
    CHECK(c1.encode(Sequence(p41, {1, 1})) == Sequence(p41, {14, 1, 1, 1, 1}));
    CHECK(c1.encode(Sequence(p41, 2)).is_zero());
    CHECK_THROWS_AS(c1.encode(Sequence(p41, {1, 2, 3})), Error);

    const PrimeModulus p29(29);
    const auto c7 = FourierCode::construct(FnttContext::build(p29, 7), EigenSymbol::PlusOne);
    CHECK(c7.encode(Sequence(p29, {1, 0})) == Sequence(p29, {16, 0, 1, 10, 10, 1, 0}));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = oracle::random_sequence(p29, 2, rng);
        const auto x = c7.encode(u);
        CHECK(x[5] == u[0]);
        CHECK(x[6] == u[1]);
        CHECK(is_eigensequence(c7.context(), x, c7.eigenvalue()));
    }
}

TEST_CASE("codewords carry the symmetry of their eigenvalue") {
    for (const auto& code : all_codes(41, 12)) {
        const auto p = code.modulus().value();
        std::uint64_t space = 1;
        for (std::size_t t = 0; t < code.dimension(); ++t) space *= p;
        if (space > 100'000) continue;
        for (const auto& w : oracle::all_codewords(code)) {
            const Sequence x(code.modulus(), w);
            CHECK((is_imaginary(code.eigenvalue().symbol()) ? is_odd(x) : is_even(x)));
        }
    }
}

TEST_CASE("secondary diagonal") {
    const auto c17 = FnttContext::build(PrimeModulus(17), 8);
    const auto d1 = find_secondary_diagonal(FourierCode::construct(c17, EigenSymbol::PlusOne));
    REQUIRE(d1);
    CHECK(d1->entry == 16);
    CHECK(d1->first_row == 1);
    const auto dj = find_secondary_diagonal(FourierCode::construct(c17, EigenSymbol::PlusJ));
    REQUIRE(dj);
    CHECK(dj->entry == 1);
    CHECK(dj->first_row == 1);

    const auto c41 = FnttContext::build(PrimeModulus(41), 5);
    for (auto s : kAllEigenSymbols) CHECK(ds_check(FourierCode::construct(c41, s)));

    // k = 1: a single entry m somewhere in P.
    const auto cm1 = FourierCode::construct(c41, EigenSymbol::MinusOne);
    CHECK(find_secondary_diagonal(cm1)->entry == 40);
}

TEST_CASE("smallest valid prime") {
    CHECK(smallest_valid_prime(5, true).value() == 41);
    CHECK(smallest_valid_prime(8, true).value() == 17);
    CHECK(smallest_valid_prime(7, true).value() == 29);
    for (std::size_t n = 2; n <= 24; ++n) {
        CHECK(smallest_valid_prime(n, true).value() == oracle::smallest_prime_by_scan(n, true));
        CHECK(smallest_valid_prime(n, false).value() == oracle::smallest_prime_by_scan(n, false));
    }
}

TEST_CASE("rate is close to one quarter") {
    for (std::size_t n = 3; n <= 40; ++n) {
        CHECK(multiplicity(n, EigenSymbol::PlusOne) >= n / 4);
        CHECK(multiplicity(n, EigenSymbol::PlusOne) <= n / 4 + 1);
        for (auto s : kAllEigenSymbols) {
            CHECK(multiplicity(n, s) + 1 >= n / 4);
            CHECK(multiplicity(n, s) <= n / 4 + 1);
        }
    }
}

TEST_CASE("parameters table rows") {
    const auto rows = parameters_table(3, 8);
    REQUIRE(rows.size() == 6);
    const auto& r5 = rows[2];
    CHECK(r5.n == 5);
    CHECK(r5.p == 41);
    CHECK(r5.cells[0].k == 2);
    CHECK(*r5.cells[0].d_exact == 3);
    CHECK(r5.cells[1].k == 1);
    CHECK(*r5.cells[1].d_exact == 5);
    CHECK(*r5.cells[2].d_exact == 4);
    CHECK(*r5.cells[3].d_exact == 4);

    const auto& r8 = rows[5];
    CHECK(r8.cells[0].k == 3);
    CHECK(r8.cells[1].k == 2);
    CHECK(r8.cells[2].k == 1);
    CHECK(*r8.cells[2].d_exact == 6);
    CHECK(r8.cells[3].k == 2);

    CHECK(rows[1].n == 4);
    CHECK(rows[1].cells[2].k == 0);
    CHECK_FALSE(rows[1].cells[2].d_exact);

    const auto smaller = parameters_table(8, 8, kAllEigenSymbols, {.j_branch = JBranch::Smaller});
    CHECK(smaller[0].cells[2].k == 2);
    CHECK(smaller[0].j == 4);
}
