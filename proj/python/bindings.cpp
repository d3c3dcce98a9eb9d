#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourier/decode.hpp"
#include "fourier/serialize.hpp"
#include "fourier/simulate.hpp"

namespace py = pybind11;
using namespace fourier;

namespace {

using Values = std::vector<std::int64_t>;

Sequence to_sequence(PrimeModulus p, const Values& values) { return Sequence(p, std::span<const std::int64_t>(values)); }

std::vector<std::uint64_t> to_list(const Sequence& s) { return {s.values().begin(), s.values().end()}; }

EigenSymbol symbol_from(const std::string& text) {
    auto s = parse_eigen_symbol(text);
    if (!s) throw Error(ErrorCode::Parse, "unknown eigenvalue '" + text + "' (expected +1, -1, +j, -j)");
    return *s;
}

FnttContext make_context(std::uint64_t p, std::size_t n, std::optional<std::uint64_t> alpha,
                         std::optional<std::uint64_t> sqrt_n, std::optional<std::uint64_t> j) {
    return FnttContext::build(PrimeModulus(p), n, ContextOptions{alpha, sqrt_n, j});
}

py::dict outcome_dict(const DecodeOutcome& o) {
    py::dict d;
    d["status"] = std::string(to_string(o.status));
    d["method"] = std::string(to_string(o.method));
    d["codeword"] = o.codeword ? py::cast(to_list(*o.codeword)) : py::none();
    d["error_vector"] = o.error_vector ? py::cast(to_list(*o.error_vector)) : py::none();
    d["errors_corrected"] = o.errors_corrected;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fourier codes over GF(p): eigensequence codes of the number theoretic transform";

    static py::exception<Error> fourier_error(m, "FourierError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            PyErr_SetString(fourier_error.ptr(), e.what());
        }
    });

    m.def("is_prime", &is_prime);
    m.def(
        "sqrt_mod",
        [](std::int64_t a, std::uint64_t p) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
            auto r = sqrt_mod(Residue{a, PrimeModulus(p)});
            if (!r) return std::nullopt;
            return std::pair{r->first.value(), r->second.value()};
        },
        py::arg("a"), py::arg("p"));
    m.def(
        "element_of_order",
        [](std::uint64_t n, std::uint64_t p) -> std::optional<std::uint64_t> {
            auto r = element_of_order(n, PrimeModulus(p));
            return r ? std::optional(r->value()) : std::nullopt;
        },
        py::arg("n"), py::arg("p"));
    m.def(
        "is_valid_fntt_params", [](std::uint64_t p, std::uint64_t n) { return is_valid_fntt_params(PrimeModulus(p), n); },
        py::arg("p"), py::arg("n"));
    m.def(
        "smallest_valid_prime", [](std::size_t n, bool need_j) { return smallest_valid_prime(n, need_j).value(); },
        py::arg("n"), py::arg("need_j") = true);
    m.def(
        "multiplicity", [](std::size_t n, const std::string& lam) { return multiplicity(n, symbol_from(lam)); },
        py::arg("n"), py::arg("lam"));

    py::class_<FnttContext>(m, "Context")
        .def(py::init(&make_context), py::arg("p"), py::arg("n"), py::arg("alpha") = py::none(),
             py::arg("sqrt_n") = py::none(), py::arg("j") = py::none())
        .def_property_readonly("p", [](const FnttContext& c) { return c.modulus().value(); })
        .def_property_readonly("n", &FnttContext::length)
        .def_property_readonly("alpha", [](const FnttContext& c) { return c.alpha().value(); })
        .def_property_readonly("sqrt_n", [](const FnttContext& c) { return c.sqrt_n().value(); })
        .def_property_readonly("j", [](const FnttContext& c) -> std::optional<std::uint64_t> {
            return c.j() ? std::optional(c.j()->value()) : std::nullopt;
        })
        .def_property_readonly("matrix", [](const FnttContext& c) { return c.matrix().to_rows(); })
        .def("forward", [](const FnttContext& c, const Values& x) { return to_list(c.forward(to_sequence(c.modulus(), x))); })
        .def("inverse", [](const FnttContext& c, const Values& x) { return to_list(c.inverse(to_sequence(c.modulus(), x))); })
        .def("even_part", [](const FnttContext& c, const Values& x) { return to_list(even_part(to_sequence(c.modulus(), x))); })
        .def("odd_part", [](const FnttContext& c, const Values& x) { return to_list(odd_part(to_sequence(c.modulus(), x))); })
        .def("is_eigensequence",
             [](const FnttContext& c, const Values& x, const std::string& lam) {
                 return is_eigensequence(c, to_sequence(c.modulus(), x), Eigenvalue::resolve(c, symbol_from(lam)));
             })
        .def("make_even_eigensequence",
             [](const FnttContext& c, const Values& x, int sign) {
                 return to_list(make_even_eigensequence(c, to_sequence(c.modulus(), x), sign));
             })
        .def("make_odd_eigensequence", [](const FnttContext& c, const Values& x, int sign) {
            return to_list(make_odd_eigensequence(c, to_sequence(c.modulus(), x), sign));
        });

    py::class_<FourierCode>(m, "FourierCode")
        .def(py::init([](const FnttContext& ctx, const std::string& lam) {
                 return FourierCode::construct(ctx, symbol_from(lam));
             }),
             py::arg("context"), py::arg("lam"))
        .def_property_readonly("context", &FourierCode::context)
        .def_property_readonly("lam", [](const FourierCode& c) { return std::string(to_string(c.eigenvalue().symbol())); })
        .def_property_readonly("n", &FourierCode::length)
        .def_property_readonly("k", &FourierCode::dimension)
        .def_property_readonly("H", [](const FourierCode& c) { return c.parity_check().to_rows(); })
        .def_property_readonly("G", [](const FourierCode& c) { return c.generator().to_rows(); })
        .def_property_readonly("d_bound", &FourierCode::distance_bound)
        .def("d_exact", [](const FourierCode& c, unsigned workers) { return dmin_exact(c, workers); },
             py::arg("workers") = 1)
        .def("ds_check", [](const FourierCode& c) { return ds_check(c); })
        .def("encode", [](const FourierCode& c, const Values& u) { return to_list(c.encode(to_sequence(c.modulus(), u))); })
        .def("contains", [](const FourierCode& c, const Values& x) { return c.contains(to_sequence(c.modulus(), x)); })
        .def("syndrome",
             [](const FourierCode& c, const Values& r) {
                 return to_list(syndrome(c.context(), c.eigenvalue(), to_sequence(c.modulus(), r)));
             })
        .def(
            "decode",
            [](const FourierCode& c, const Values& r, int t_max) {
                return outcome_dict(decode(c, to_sequence(c.modulus(), r), t_max));
            },
            py::arg("received"), py::arg("t_max") = 2)
        .def(
            "simulate",
            [](const FourierCode& c, int t, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
                SimConfig cfg;
                cfg.injected_weight = t;
                cfg.t_max = std::max(1, t);
                cfg.trials = trials;
                cfg.seed = seed;
                cfg.workers = workers;
                const auto r = simulate(c, cfg);
                py::dict d;
                d["trials"] = r.trials;
                d["corrected"] = r.corrected;
                d["already_codeword"] = r.already_codeword;
                d["miscorrected"] = r.miscorrected;
                d["failures"] = r.failures;
                return d;
            },
            py::arg("t"), py::arg("trials"), py::arg("seed") = 1, py::arg("workers") = 1)
        .def("to_json", [](const FourierCode& c) { return to_structured(c); })
        .def_static("from_json", &from_structured);

    m.def(
        "parameters_table",
        [](std::size_t first, std::size_t last, const std::string& j_branch) {
            TableOptions options;
            options.j_branch = j_branch == "smaller" ? JBranch::Smaller : JBranch::Larger;
            py::list rows;
            for (const auto& row : parameters_table(first, last, kAllEigenSymbols, options)) {
                py::dict r;
                r["n"] = row.n;
                r["p"] = row.p;
                py::dict cells;
                for (const auto& cell : row.cells) {
                    cells[py::str(std::string(to_string(cell.symbol)))] =
                        cell.k == 0 ? py::object(py::none()) : py::object(py::make_tuple(cell.k, *cell.d_exact));
                }
                r["cells"] = cells;
                rows.append(r);
            }
            return rows;
        },
        py::arg("first"), py::arg("last"), py::arg("j_branch") = "larger");
}
