#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourier/decode.hpp"
#include "fourier/reference.hpp"
#include "fourier/serialize.hpp"
#include "fourier/simulate.hpp"

namespace fourier::cli {
namespace {

struct CodeSpec {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::string lambda = "+1";
    std::optional<std::uint64_t> alpha;
    std::optional<std::uint64_t> sqrt_branch;
    std::optional<std::uint64_t> j_branch;
};

void add_spec_options(CLI::App* cmd, CodeSpec& spec) {
    cmd->add_option("--p", spec.p, "prime modulus")->required();
    cmd->add_option("--n", spec.n, "block length N")->required();
    cmd->add_option("--lambda", spec.lambda, "eigenvalue: +1, -1, +j or -j")->required();
    cmd->add_option("--alpha", spec.alpha, "element of order N (default: smallest)");
    cmd->add_option("--sqrt-branch", spec.sqrt_branch, "square root of N to use (default: smaller)");
    cmd->add_option("--j-branch", spec.j_branch, "square root of -1 to use (default: smaller)");
}

FourierCode build_code(const CodeSpec& spec) {
    const auto symbol = parse_eigen_symbol(spec.lambda);
    if (!symbol) throw Error(ErrorCode::Parse, "unknown --lambda '" + spec.lambda + "' (expected +1, -1, +j, -j)");
    const PrimeModulus p(spec.p);
    const auto ctx = FnttContext::build(p, spec.n, ContextOptions{spec.alpha, spec.sqrt_branch, spec.j_branch});
    return FourierCode::construct(ctx, *symbol);
}

std::optional<std::size_t> try_exact_distance(const FourierCode& code) {
    try {
        return dmin_exact(code, std::max(1u, std::thread::hardware_concurrency()));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SearchTooLarge) return std::nullopt;
        throw;
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::LengthMismatch:
    case ErrorCode::ModulusMismatch: return kUsageError;
    default: return kConstructionError;
    }
}

void render_table1(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "Eigenvalue multiplicities (computed N - rank(F - lambda I) / tabulated)\n";
    out << std::setw(4) << "N" << std::setw(6) << "p";
    for (auto s : kAllEigenSymbols) out << std::setw(10) << to_string(s);
    out << "  profile\n";
    for (const auto& row : rows) {
        out << std::setw(4) << row.n << std::setw(6) << row.p;
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            std::ostringstream cell;
            cell << row.cells[c].k << "/" << multiplicity(row.n, row.cells[c].symbol);
            out << std::setw(10) << cell.str();
        }
        out << "  " << (row.profile ? to_string(*row.profile) : std::string_view("unmatched")) << "\n";
    }
}

void render_table2(std::ostream& out, const std::vector<TableRow>& rows, std::size_t& mismatches) {
    out << "Code parameters k, d_exact (d_bound); '-' marks an empty code; '*' differs from the reference value\n";
    out << std::setw(4) << "N" << std::setw(6) << "p" << std::setw(7) << "alpha" << std::setw(7) << "sqrtN"
        << std::setw(5) << "j";
    for (auto s : kAllEigenSymbols) out << std::setw(13) << to_string(s);
    out << "\n";
    for (const auto& row : rows) {
        const auto ref = reference::reference_parameters(row.n);
        out << std::setw(4) << row.n << std::setw(6) << row.p << std::setw(7) << row.alpha << std::setw(7)
            << row.sqrt_n << std::setw(5) << row.j;
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const auto& cell = row.cells[c];
            std::ostringstream text;
            if (cell.k == 0) {
                text << "-";
            } else {
                text << cell.k << "," << *cell.d_exact << " (" << *cell.d_bound << ")";
            }
            if (ref) {
                const auto idx = static_cast<std::size_t>(
                    std::find(kAllEigenSymbols.begin(), kAllEigenSymbols.end(), cell.symbol) - kAllEigenSymbols.begin());
                const auto& want = (*ref)[idx];
                const bool same = want ? (cell.k == want->k && cell.d_exact == want->d) : cell.k == 0;
                if (!same) {
                    text << "*";
                    ++mismatches;
                }
            }
            out << std::setw(13) << text.str();
        }
        out << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fourier codes over GF(p): construction, encoding, decoding and tables"};
    app.name("fourier-codes");
    app.require_subcommand(1);

    CodeSpec spec;
    std::string format = "text";
    std::string message, received;
    int t = 2;
    std::optional<int> t_max;
    std::uint64_t trials = 1000, seed = 1;
    unsigned workers = 1;
    std::size_t from = 3, to = 12;
    std::string j_convention = "larger";
    bool trace_flag = false;

    auto* construct = app.add_subcommand("construct", "build a code and print H, G and its parameters");
    add_spec_options(construct, spec);
    construct->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* encode = app.add_subcommand("encode", "encode a k-symbol message");
    add_spec_options(encode, spec);
    encode->add_option("--message", message, "comma-separated residues")->required();

    auto* decode_cmd = app.add_subcommand("decode", "decode an n-symbol received word");
    add_spec_options(decode_cmd, spec);
    decode_cmd->add_option("--received", received, "comma-separated residues")->required();
    decode_cmd->add_option("--t", t, "correction capability (1 or 2)")->check(CLI::Range(1, 2));
    decode_cmd->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    decode_cmd->add_flag("--trace", trace_flag, "print every candidate the decoder tested");

    auto* tables = app.add_subcommand("tables", "reproduce the multiplicity and parameter tables");
    tables->add_option("--from", from, "first N")->check(CLI::Range(2, 64));
    tables->add_option("--to", to, "last N")->check(CLI::Range(2, 64));
    tables->add_option("--j-convention", j_convention, "root of -1 labelled +j: smaller or larger")
        ->check(CLI::IsMember({"smaller", "larger"}));

    auto* mindist = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    add_spec_options(mindist, spec);

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo error injection and decoding");
    add_spec_options(simulate_cmd, spec);
    simulate_cmd->add_option("--t", t, "errors injected per trial (0, 1 or 2)")->check(CLI::Range(0, 2));
    simulate_cmd->add_option("--t-max", t_max, "decoder capability (default: max(1, --t))")->check(CLI::Range(1, 2));
    simulate_cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", seed, "generator seed");
    simulate_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
    simulate_cmd->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* examples = app.add_subcommand("examples", "re-derive the worked examples and print PASS/FAIL");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (construct->parsed()) {
            auto code = build_code(spec);
            if (auto d = try_exact_distance(code)) code = code.with_exact_distance(*d);
            if (format == "structured") {
                out << to_structured(code) << "\n";
            } else {
                write_text(out, code);
            }
            return kSuccess;
        }
        if (encode->parsed()) {
            const auto code = build_code(spec);
            const auto msg = Sequence::parse(code.modulus(), message);
            out << code.encode(msg).to_string() << "\n";
            return kSuccess;
        }
        if (decode_cmd->parsed()) {
            const auto code = build_code(spec);
            const auto r = Sequence::parse(code.modulus(), received);
            if (r.size() != code.length()) {
                throw Error(ErrorCode::LengthMismatch, "received word has " + std::to_string(r.size()) +
                                                           " symbols, code length is " + std::to_string(code.length()));
            }
            DecodeTrace trace;
            const auto outcome = decode(code, r, t, trace_flag ? &trace : nullptr);
            std::vector<std::size_t> positions;
            std::vector<std::uint64_t> values;
            if (outcome.error_vector) {
                for (std::size_t i = 0; i < outcome.error_vector->size(); ++i) {
                    if (outcome.error_vector->raw(i) == 0) continue;
                    positions.push_back(i);
                    values.push_back(outcome.error_vector->raw(i));
                }
            }
            if (format == "structured") {
                nlohmann::json doc;
                doc["status"] = std::string(to_string(outcome.status));
                doc["method"] = std::string(to_string(outcome.method));
                doc["codeword"] = outcome.codeword ? nlohmann::json(outcome.codeword->to_string()) : nlohmann::json(nullptr);
                doc["error_positions"] = positions;
                doc["error_values"] = values;
                doc["errors_corrected"] = outcome.errors_corrected;
                if (trace_flag) {
                    auto& arr = doc["trace"] = nlohmann::json::array();
                    for (const auto& a : trace) {
                        arr.push_back({{"method", std::string(to_string(a.method))},
                                       {"candidate", a.candidate.to_string()},
                                       {"spectrum", a.spectrum.to_string()},
                                       {"accepted", a.accepted}});
                    }
                }
                out << doc.dump(2) << "\n";
            } else {
                if (trace_flag) {
                    for (const auto& a : trace) {
                        out << "try " << to_string(a.method) << ": r = " << a.candidate.to_string()
                            << "  R = " << a.spectrum.to_string() << (a.accepted ? "  accepted" : "") << "\n";
                    }
                }
                out << "status: " << to_string(outcome.status) << "\n";
                out << "method: " << to_string(outcome.method) << "\n";
                if (outcome.codeword) out << "codeword: " << outcome.codeword->to_string() << "\n";
                out << "errors:";
                for (std::size_t e = 0; e < positions.size(); ++e) out << " " << positions[e] << ":" << values[e];
                out << "\n";
            }
            return outcome.succeeded() ? kSuccess : kDecodeFailure;
        }
        if (tables->parsed()) {
            if (from > to) throw Error(ErrorCode::Parse, "--from must not exceed --to");
            TableOptions options;
            options.j_branch = j_convention == "larger" ? JBranch::Larger : JBranch::Smaller;
            options.workers = std::max(1u, std::thread::hardware_concurrency());
            const auto start = std::chrono::steady_clock::now();
            const auto rows = parameters_table(from, to, kAllEigenSymbols, options);
            std::size_t mismatches = 0;
            render_table1(out, rows);
            out << "\n";
            render_table2(out, rows, mismatches);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            out << "\n" << mismatches << " cell(s) differ from the reference parameters; " << std::fixed
                << std::setprecision(3) << elapsed.count() << " s\n";
            return kSuccess;
        }
        if (mindist->parsed()) {
            const auto code = build_code(spec);
            const auto d = dmin_exact(code, std::max(1u, std::thread::hardware_concurrency()));
            out << "n = " << code.length() << "  k = " << code.dimension() << "  d_exact = " << d
                << "  d_bound = " << code.distance_bound() << "\n";
            return kSuccess;
        }
        if (simulate_cmd->parsed()) {
            const auto code = build_code(spec);
            SimConfig config;
            config.injected_weight = t;
            config.t_max = t_max.value_or(std::max(1, t));
            config.trials = trials;
            config.seed = seed;
            config.workers = workers;
            const auto report = fourier::simulate(code, config);
            if (format == "structured") {
                out << to_structured(report) << "\n";
            } else {
                out << "trials: " << report.trials << "  injected: " << report.injected_weight
                    << "  t_max: " << report.t_max << "\n";
                out << "corrected: " << report.corrected << " (already codeword: " << report.already_codeword
                    << ")  miscorrected: " << report.miscorrected << "  failures: " << report.failures << "\n";
                out << "seed: " << report.seed << "  generator: " << report.generator << "\n";
                out << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
            }
            return kSuccess;
        }
        if (examples->parsed()) {
            bool all = true;
            for (const auto& r : reference::run_worked_examples()) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) out << " -- " << r.detail;
                out << "\n";
                all = all && r.passed;
            }
            return all ? kSuccess : kDecodeFailure;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kUsageError;
}

} // namespace fourier::cli
