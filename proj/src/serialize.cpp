#include "fourier/serialize.hpp"

#include <json.hpp>

namespace fourier {

using nlohmann::json;

void write_text(std::ostream& os, const FourierCode& code) {
    const auto& ctx = code.context();
    os << "Fourier code F^" << to_string(code.eigenvalue().symbol()) << "(" << code.length() << ", "
       << code.dimension() << ") over GF(" << code.modulus().value() << ")\n";
    os << "alpha = " << ctx.alpha() << ", sqrt(N) = " << ctx.sqrt_n() << ", j = ";
    if (ctx.j()) {
        os << *ctx.j();
    } else {
        os << "-";
    }
    os << ", lambda = " << code.eigenvalue().residue() << "\n";
    os << "n = " << code.length() << "  k = " << code.dimension() << "  d_bound = " << code.distance_bound();
    if (code.exact_distance()) os << "  d_exact = " << *code.exact_distance();
    os << "\nH =\n" << code.parity_check() << "G =\n" << code.generator();
}

std::string to_structured(const FourierCode& code, int indent) {
    const auto& ctx = code.context();
    json doc;
    doc["p"] = code.modulus().value();
    doc["n"] = code.length();
    doc["k"] = code.dimension();
    doc["lambda"] = std::string(to_string(code.eigenvalue().symbol()));
    doc["alpha"] = ctx.alpha().value();
    doc["sqrtN"] = ctx.sqrt_n().value();
    doc["j"] = ctx.j() ? json(ctx.j()->value()) : json(nullptr);
    doc["H"] = code.parity_check().to_rows();
    doc["G"] = code.generator().to_rows();
    doc["d_bound"] = code.distance_bound();
    doc["d_exact"] = code.exact_distance() ? json(*code.exact_distance()) : json(nullptr);
    return doc.dump(indent);
}

FourierCode from_structured(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed code document: ") + e.what());
    }
    try {
        const auto symbol = parse_eigen_symbol(doc.at("lambda").get<std::string>());
        if (!symbol) throw Error(ErrorCode::Parse, "unknown lambda symbol");
        const PrimeModulus p(doc.at("p").get<std::uint64_t>());
        ContextOptions options;
        options.alpha = doc.at("alpha").get<std::uint64_t>();
        options.sqrt_n = doc.at("sqrtN").get<std::uint64_t>();
        if (!doc.at("j").is_null()) options.j = doc.at("j").get<std::uint64_t>();
        const auto ctx = FnttContext::build(p, doc.at("n").get<std::size_t>(), options);
        auto code = FourierCode::construct(ctx, *symbol);

        const auto h = Matrix::from_rows(p, doc.at("H").get<std::vector<std::vector<std::uint64_t>>>());
        const auto g = Matrix::from_rows(p, doc.at("G").get<std::vector<std::vector<std::uint64_t>>>());
        if (!(h == code.parity_check()) || !(g == code.generator())) {
            throw Error(ErrorCode::Parse, "stored H/G do not match the code rebuilt from its parameters");
        }
        if (doc.at("k").get<std::size_t>() != code.dimension() ||
            doc.at("d_bound").get<std::size_t>() != code.distance_bound()) {
            throw Error(ErrorCode::Parse, "stored k/d_bound do not match the rebuilt code");
        }
        if (!doc.at("d_exact").is_null()) code = code.with_exact_distance(doc.at("d_exact").get<std::size_t>());
        return code;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("code document: ") + e.what());
    }
}

} // namespace fourier
