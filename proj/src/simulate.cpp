#include "fourier/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include <json.hpp>

namespace fourier {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Tally {
    std::uint64_t corrected = 0, already = 0, miscorrected = 0, failures = 0;
};

void run_trial(const FourierCode& code, const SimConfig& config, std::uint64_t trial, Tally& tally) {
    const auto m = code.modulus();
    const auto n = code.length();
    std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(trial)));
    std::uniform_int_distribution<std::uint64_t> symbol(0, m.value() - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, m.value() - 1);

    Sequence message(m, code.dimension());
    for (std::size_t t = 0; t < message.size(); ++t) message.set_raw(t, symbol(rng));
    const auto sent = code.encode(message);

    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    Sequence received = sent;
    for (int e = 0; e < config.injected_weight; ++e) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(e), n - 1);
        std::swap(positions[static_cast<std::size_t>(e)], positions[pick(rng)]);
        const auto pos = positions[static_cast<std::size_t>(e)];
        received.set_raw(pos, m.add(received.raw(pos), nonzero(rng)));
    }

    const auto outcome = decode(code, received, config.t_max);
    if (!outcome.succeeded()) {
        ++tally.failures;
    } else if (*outcome.codeword == sent) {
        ++tally.corrected;
        if (outcome.status == DecodeStatus::AlreadyCodeword) ++tally.already;
    } else {
        ++tally.miscorrected;
    }
}

} // namespace

bool SimReport::same_counts(const SimReport& o) const noexcept {
    return trials == o.trials && injected_weight == o.injected_weight && t_max == o.t_max &&
           corrected == o.corrected && already_codeword == o.already_codeword && miscorrected == o.miscorrected &&
           failures == o.failures && seed == o.seed && generator == o.generator;
}

SimReport simulate(const FourierCode& code, const SimConfig& config) {
    if (config.trials == 0) throw Error(ErrorCode::InvalidParameters, "trials must be positive");
    if (config.injected_weight < 0 || static_cast<std::size_t>(config.injected_weight) > code.length()) {
        throw Error(ErrorCode::InvalidParameters, "injected weight out of range");
    }
    const auto start = std::chrono::steady_clock::now();
    const unsigned workers = std::max(1u, config.workers);
    std::vector<Tally> tallies(workers);
    if (workers == 1) {
        for (std::uint64_t t = 0; t < config.trials; ++t) run_trial(code, config, t, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t t = w; t < config.trials; t += workers) run_trial(code, config, t, tallies[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    SimReport report;
    report.trials = config.trials;
    report.injected_weight = config.injected_weight;
    report.t_max = config.t_max;
    report.seed = config.seed;
    report.generator = "mt19937_64 per trial, seeded splitmix64(seed ^ splitmix64(trial))";
    for (const auto& t : tallies) {
        report.corrected += t.corrected;
        report.already_codeword += t.already;
        report.miscorrected += t.miscorrected;
        report.failures += t.failures;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::string to_structured(const SimReport& r, int indent) {
    nlohmann::json doc;
    doc["trials"] = r.trials;
    doc["injected_weight"] = r.injected_weight;
    doc["t_max"] = r.t_max;
    doc["corrected"] = r.corrected;
    doc["already_codeword"] = r.already_codeword;
    doc["miscorrected"] = r.miscorrected;
    doc["failures"] = r.failures;
    doc["seed"] = r.seed;
    doc["generator"] = r.generator;
    doc["elapsed_seconds"] = r.elapsed.count();
    return doc.dump(indent);
}

} // namespace fourier
