#include <doctest.h>

#include "fourier/decode.hpp"
#include "oracles.hpp"
#include "test_contexts.hpp"

using namespace fourier;

namespace {

const PrimeModulus p29(29);

FourierCode f7() { return FourierCode::construct(FnttContext::build(p29, 7), EigenSymbol::PlusOne); }

Sequence s29(std::initializer_list<std::int64_t> v) { return Sequence(p29, v); }

std::uint64_t space_size(const FourierCode& code) {
    std::uint64_t s = 1;
    for (std::size_t t = 0; t < code.dimension(); ++t) s *= code.modulus().value();
    return s;
}

// Small codes with d >= min_d whose codeword sets are cheap to enumerate.
std::vector<FourierCode> decodable_codes(std::size_t min_d, std::uint64_t max_space = 10'000) {
    std::vector<FourierCode> out;
    for (const auto& ctx : testing_contexts::all_valid(41, 12)) {
        for (auto s : kAllEigenSymbols) {
            if (is_imaginary(s) && !ctx.j()) continue;
            try {
                auto code = FourierCode::construct(ctx, s);
                if (space_size(code) > max_space) continue;
                if (dmin_exact(code) >= min_d) out.push_back(std::move(code));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyCode) throw;
            }
        }
    }
    return out;
}

// All codewords within distance t of r.
std::vector<oracle::Word> near_codewords(const std::vector<oracle::Word>& words, const oracle::Word& r, std::size_t t) {
    std::vector<oracle::Word> out;
    for (const auto& w : words)
        if (oracle::distance(w, r) <= t) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("syndrome") {
    const auto code = f7();
    const auto& ctx = code.context();
    for (std::size_t r = 0; r < code.dimension(); ++r) CHECK(syndrome(ctx, code.eigenvalue(), code.generator().row(r)).is_zero());
    CHECK_FALSE(syndrome(ctx, code.eigenvalue(), s29({16, 2, 1, 10, 10, 1, 3})).is_zero());
    CHECK(syndrome(ctx, code.eigenvalue(), Sequence(p29, 7)).is_zero());
}

TEST_CASE("check_r0") {
    const auto code = f7();
    CHECK(check_r0(code.context(), code.eigenvalue(), s29({0, 3, 1, 10, 10, 1, 3})).value() == 23);
    CHECK(check_r0(code.context(), code.eigenvalue(), s29({0, 2, 1, 10, 10, 1, 2})).value() == 11);
    CHECK(check_r0(code.context(), code.eigenvalue(), Sequence(p29, 7)).value() == 0);

    for (const auto& c : decodable_codes(1)) {
        if (is_imaginary(c.eigenvalue().symbol())) continue;
        for (const auto& w : oracle::all_codewords(c)) {
            const Sequence x(c.modulus(), w);
            try {
                CHECK(check_r0(c.context(), c.eigenvalue(), x) == x[0]);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::DegenerateConstraint);
            }
        }
    }
}

TEST_CASE("repair_pair") {
    const auto code = f7();
    CHECK(repair_pair(code, s29({16, 2, 1, 10, 10, 1, 3}), 1) == s29({16, 0, 1, 10, 10, 1, 0}));
    const auto x = s29({20, 1, 0, 20, 20, 0, 1});
    for (std::size_t i = 1; i <= 3; ++i) CHECK(repair_pair(code, x, i) == x);
    for (std::int64_t a = 0; a < 29; ++a) {
        for (std::int64_t b = 0; b < 29; ++b) {
            auto r = x;
            r.set_raw(2, a);
            r.set_raw(5, b);
            CHECK(repair_pair(code, r, 2) == x);
        }
    }
}

TEST_CASE("repair_pair is idempotent on codewords of every small code") {
    for (const auto& c : decodable_codes(1, 2000)) {
        for (const auto& w : oracle::all_codewords(c)) {
            const Sequence x(c.modulus(), w);
            for (std::size_t i = 1; 2 * i < c.length(); ++i) {
                try {
                    CHECK(repair_pair(c, x, i) == x);
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::DegenerateConstraint);
                }
            }
        }
    }
}

TEST_CASE("single symmetric decoding") {
    const auto code = f7();
    const auto x = s29({16, 0, 1, 10, 10, 1, 0});
    CHECK(decode_single_symmetric(code, x).status == DecodeStatus::AlreadyCodeword);
    for (std::int64_t e = 1; e < 29; ++e) {
        auto r = x;
        r.set_raw(0, (16 + e) % 29);
        const auto out = decode_single_symmetric(code, r);
        REQUIRE(out.status == DecodeStatus::Corrected);
        CHECK(*out.codeword == x);
        CHECK(out.errors_corrected == 1);
        CHECK(out.error_vector->raw(0) == static_cast<std::uint64_t>(e));
    }

    const PrimeModulus p17(17);
    const auto c8 = FourierCode::construct(FnttContext::build(p17, 8), EigenSymbol::PlusOne);
    const auto y = c8.generator().row(0);
    for (std::uint64_t e = 1; e < 17; ++e) {
        auto r = y;
        r.set_raw(4, (y.raw(4) + e) % 17);
        const auto out = decode_single_symmetric(c8, r);
        REQUIRE(out.status == DecodeStatus::Corrected);
        CHECK(*out.codeword == y);
    }
}

TEST_CASE("single asymmetric decoding") {
    const auto code = f7();
    const auto out = decode_single_asymmetric(code, s29({16, 0, 1, 10, 10, 1, 5}), 1);
    REQUIRE(out.status == DecodeStatus::Corrected);
    CHECK(*out.codeword == s29({16, 0, 1, 10, 10, 1, 0}));

    const PrimeModulus p41(41);
    const auto c5 = FourierCode::construct(FnttContext::build(p41, 5), EigenSymbol::PlusOne);
    const auto o5 = decode_single_asymmetric(c5, Sequence(p41, {7, 9, 1, 1, 0}), 1);
    REQUIRE(o5.status == DecodeStatus::Corrected);
    CHECK(*o5.codeword == Sequence(p41, {7, 0, 1, 1, 0}));
}

TEST_CASE("double symmetric decoding") {
    const auto code = f7();
    const auto x = s29({16, 0, 1, 10, 10, 1, 0});
    CHECK(decode_double_symmetric(code, x).status == DecodeStatus::AlreadyCodeword);
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::uint64_t e = 1; e < 29; ++e) {
            auto r = x;
            r.set_raw(i, (x.raw(i) + e) % 29);
            r.set_raw(7 - i, (x.raw(7 - i) + e) % 29);
            const auto out = decode_double_symmetric(code, r);
            REQUIRE(out.status == DecodeStatus::Corrected);
            CHECK(*out.codeword == x);
            CHECK(out.errors_corrected == 2);
        }
    }
    auto r = x;
    r.set_raw(2, 10);
    r.set_raw(5, 10);
    r.set_raw(0, 3);
    r.set_raw(1, 4);
    r.set_raw(6, 4);
    CHECK(decode_double_symmetric(code, r).status == DecodeStatus::Failure);
}

TEST_CASE("algorithm 1") {
    const auto code = f7();
    DecodeTrace trace;
    const auto out = decode_double_a1(code, s29({16, 2, 1, 10, 10, 1, 3}), 1, &trace);
    CHECK(out.status == DecodeStatus::Failure);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].candidate == s29({23, 3, 1, 10, 10, 1, 3}));
    CHECK(trace[1].candidate == s29({11, 2, 1, 10, 10, 1, 2}));

    const auto x = s29({16, 0, 1, 10, 10, 1, 0});
    for (std::size_t i = 1; i < 7; ++i) {
        for (std::uint64_t e0 = 1; e0 < 29; ++e0) {
            auto r = x;
            r.set_raw(0, (x.raw(0) + e0) % 29);
            r.set_raw(i, (x.raw(i) + 7) % 29);
            const auto o = decode_double_a1(code, r, std::min(i, 7 - i));
            REQUIRE(o.status == DecodeStatus::Corrected);
            CHECK(*o.codeword == x);
        }
    }
}

TEST_CASE("algorithm 2") {
    const auto code = f7();
    const auto out = decode_double_a2(code, s29({16, 2, 1, 10, 10, 1, 3}), 1);
    REQUIRE(out.status == DecodeStatus::Corrected);
    CHECK(*out.codeword == s29({16, 0, 1, 10, 10, 1, 0}));

    const auto x = s29({20, 1, 0, 20, 20, 0, 1});
    for (std::uint64_t a = 1; a < 29; ++a) {
        for (std::uint64_t b = 1; b < 29; ++b) {
            if (a == b) continue;
            auto r = x;
            r.set_raw(1, (x.raw(1) + a) % 29);
            r.set_raw(6, (x.raw(6) + b) % 29);
            const auto o = decode_double_a2(code, r, 1);
            REQUIRE(o.status == DecodeStatus::Corrected);
            CHECK(*o.codeword == x);
        }
    }
}

TEST_CASE("algorithm 3") {
    const auto code = f7();
    DecodeTrace trace;
    const auto out = decode_double_a3(code, s29({16, 2, 3, 10, 10, 1, 0}), 1, 2, &trace);
    REQUIRE(out.status == DecodeStatus::Corrected);
    CHECK(*out.codeword == s29({16, 0, 1, 10, 10, 1, 0}));
    REQUIRE(trace.size() == 4);
    CHECK_FALSE(trace[0].accepted);
    CHECK_FALSE(trace[1].accepted);
    CHECK_FALSE(trace[2].accepted);
    CHECK(trace[3].accepted);

    const auto x = s29({16, 0, 1, 10, 10, 1, 0});
    for (std::size_t i : {1u, 6u}) {
        for (std::size_t j : {2u, 5u}) {
            auto r = x;
            r.set_raw(i, (x.raw(i) + 3) % 29);
            r.set_raw(j, (x.raw(j) + 9) % 29);
            const auto o = decode_double_a3(code, r, 1, 2);
            REQUIRE(o.status == DecodeStatus::Corrected);
            CHECK(*o.codeword == x);
        }
    }
    auto r = x;
    r.set_raw(1, 5);
    r.set_raw(6, 7);
    r.set_raw(2, 8);
    r.set_raw(5, 11);
    CHECK(decode_double_a3(code, r, 1, 2).status == DecodeStatus::Failure);
}

TEST_CASE("decode ladder on the worked examples") {
    const auto code = f7();
    const auto a = decode(code, s29({16, 2, 1, 10, 10, 1, 3}), 2);
    REQUIRE(a.status == DecodeStatus::Corrected);
    CHECK(a.method == DecodeMethod::Algorithm2);
    CHECK(*a.codeword == s29({16, 0, 1, 10, 10, 1, 0}));
    CHECK(a.errors_corrected == 2);

    const auto b = decode(code, s29({16, 2, 3, 10, 10, 1, 0}), 2);
    REQUIRE(b.status == DecodeStatus::Corrected);
    CHECK(b.method == DecodeMethod::Algorithm3);
    CHECK(*b.codeword == s29({16, 0, 1, 10, 10, 1, 0}));

    CHECK(decode(code, s29({16, 2, 1, 10, 10, 1, 3}), 1).status == DecodeStatus::Failure);
    CHECK(decode(code, s29({16, 0, 1, 10, 10, 1, 0})).status == DecodeStatus::AlreadyCodeword);
    CHECK(mismatched_pairs(code, s29({16, 2, 3, 10, 10, 1, 0})) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("single-error completeness on every small code with d >= 3") {
    std::mt19937_64 rng(5);
    for (const auto& code : decodable_codes(3)) {
        const auto words = oracle::all_codewords(code);
        const auto p = code.modulus().value();
        CAPTURE(p);
        CAPTURE(code.length());
        CAPTURE(to_string(code.eigenvalue().symbol()));
        for (int sample = 0; sample < 5; ++sample) {
            const Sequence x(code.modulus(), words[rng() % words.size()]);
            for (std::size_t pos = 0; pos < code.length(); ++pos) {
                for (std::uint64_t e = 1; e < p; ++e) {
                    auto r = x;
                    r.set_raw(pos, (x.raw(pos) + e) % p);
                    const auto out = decode(code, r, 1);
                    REQUIRE(out.status == DecodeStatus::Corrected);
                    CHECK(*out.codeword == x);
                    CHECK(out.errors_corrected == 1);
                }
            }
        }
    }
}

TEST_CASE("double-error completeness on GF(29) length 7") {
    const auto code = f7();
    const auto words = oracle::all_codewords(code);
    std::mt19937_64 rng(11);
    for (int sample = 0; sample < 6; ++sample) {
        const Sequence x(p29, words[rng() % words.size()]);
        for (std::size_t i = 0; i < 7; ++i) {
            for (std::size_t j = i + 1; j < 7; ++j) {
                for (int v = 0; v < 25; ++v) {
                    auto r = x;
                    r.set_raw(i, (x.raw(i) + 1 + rng() % 28) % 29);
                    r.set_raw(j, (x.raw(j) + 1 + rng() % 28) % 29);
                    const auto out = decode(code, r, 2);
                    REQUIRE(out.status == DecodeStatus::Corrected);
                    CHECK(*out.codeword == x);
                    CHECK(out.errors_corrected == 2);
                }
            }
        }
    }
}

TEST_CASE("decode agrees with nearest-codeword search") {
    const auto code = f7();
    const auto words = oracle::all_codewords(code);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        auto r = Sequence(p29, words[rng() % words.size()]);
        const auto weight = rng() % 4;
        for (std::size_t t = 0; t < weight; ++t) r.set_raw(rng() % 7, rng() % 29);
        const auto near = near_codewords(words, oracle::to_word(r), 2);
        const auto out = decode(code, r, 2);
        if (near.empty()) {
            CHECK(out.status == DecodeStatus::Failure);
        } else {
            REQUIRE(near.size() == 1);
            REQUIRE(out.succeeded());
            CHECK(oracle::to_word(*out.codeword) == near[0]);
        }
    }
}

TEST_CASE("soundness on random received words") {
    std::mt19937_64 rng(19);
    for (const auto& code : decodable_codes(1)) {
        const int t_max = dmin_exact(code) >= 5 ? 2 : 1;
        for (int trial = 0; trial < 10'000; ++trial) {
            const auto r = oracle::random_sequence(code.modulus(), code.length(), rng);
            const auto out = decode(code, r, t_max);
            if (!out.succeeded()) continue;
            CHECK(syndrome(code.context(), code.eigenvalue(), *out.codeword).is_zero());
            CHECK(hamming_distance(r, *out.codeword) <= static_cast<std::size_t>(t_max));
            CHECK(out.error_vector->weight() == out.errors_corrected);
        }
    }
}

TEST_CASE("imaginary eigenvalue codes decode single and double errors") {
    const PrimeModulus p17(17);
    const auto ctx = FnttContext::build(p17, 8, {.j = 13});
    const auto code = FourierCode::construct(ctx, EigenSymbol::PlusJ);
    REQUIRE(dmin_exact(code) == 6);
    const auto words = oracle::all_codewords(code);
    for (const auto& w : words) {
        const Sequence x(p17, w);
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = i; j < 8; ++j) {
                auto r = x;
                r.set_raw(i, (x.raw(i) + 3) % 17);
                if (j != i) r.set_raw(j, (x.raw(j) + 5) % 17);
                const auto out = decode(code, r, 2);
                REQUIRE(out.status == DecodeStatus::Corrected);
                CHECK(*out.codeword == x);
            }
        }
    }
}
