#include "fourier/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace fourier {
namespace {

void require_compatible(const Sequence& a, const Sequence& b) {
    if (!(a.modulus() == b.modulus())) throw Error(ErrorCode::ModulusMismatch, "sequence moduli differ");
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "sequence lengths differ: " + std::to_string(a.size()) +
                                                   " vs " + std::to_string(b.size()));
    }
}

} // namespace

Sequence::Sequence(PrimeModulus m, std::initializer_list<std::int64_t> values)
    : Sequence(m, std::span<const std::int64_t>(values.begin(), values.size())) {}

Sequence::Sequence(PrimeModulus m, std::span<const std::int64_t> values) : m_(m) {
    v_.reserve(values.size());
    for (auto v : values) v_.push_back(m.reduce(v));
}

Sequence::Sequence(PrimeModulus m, std::vector<std::uint64_t> reduced) : m_(m), v_(std::move(reduced)) {
    for (auto& v : v_) v %= m.value();
}

void Sequence::set(std::size_t i, Residue r) {
    if (!(r.modulus() == m_)) throw Error(ErrorCode::ModulusMismatch, "residue modulus differs from sequence");
    v_[i] = r.value();
}

bool Sequence::is_zero() const noexcept {
    for (auto v : v_)
        if (v != 0) return false;
    return true;
}

std::size_t Sequence::weight() const noexcept {
    std::size_t w = 0;
    for (auto v : v_) w += v != 0;
    return w;
}

std::string Sequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v_[i]);
    }
    return out;
}

Sequence Sequence::parse(PrimeModulus m, const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        auto first = text.data() + pos;
        auto last = text.data() + end;
        while (first < last && *first == ' ') ++first;
        while (last > first && last[-1] == ' ') --last;
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::Parse, "malformed residue '" + std::string(first, last) + "'");
        }
        if (v >= m.value()) {
            throw Error(ErrorCode::Parse, "residue " + std::to_string(v) + " out of range [0, " +
                                              std::to_string(m.value() - 1) + "]");
        }
        values.push_back(v);
        pos = end + 1;
    }
    return Sequence(m, std::move(values));
}

Sequence operator+(const Sequence& a, const Sequence& b) {
    require_compatible(a, b);
    Sequence out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.v_[i] = a.m_.add(a.v_[i], b.v_[i]);
    return out;
}

Sequence operator-(const Sequence& a, const Sequence& b) {
    require_compatible(a, b);
    Sequence out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.v_[i] = a.m_.sub(a.v_[i], b.v_[i]);
    return out;
}

Sequence operator*(Residue s, const Sequence& a) {
    if (!(s.modulus() == a.m_)) throw Error(ErrorCode::ModulusMismatch, "scalar modulus differs from sequence");
    Sequence out = a;
    for (auto& v : out.v_) v = a.m_.mul(v, s.value());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) { return os << '(' << s.to_string() << ')'; }

std::size_t hamming_distance(const Sequence& a, const Sequence& b) {
    require_compatible(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.raw(i) != b.raw(i);
    return d;
}

Matrix::Matrix(PrimeModulus m, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : m_(m), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    v_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
        for (auto v : r) v_.push_back(m.reduce(v));
    }
}

Matrix Matrix::identity(PrimeModulus m, std::size_t n) {
    Matrix out(m, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

Sequence Matrix::row(std::size_t r) const {
    return Sequence(m_, std::vector<std::uint64_t>(v_.begin() + r * cols_, v_.begin() + (r + 1) * cols_));
}

std::vector<std::vector<std::uint64_t>> Matrix::to_rows() const {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(v_.begin() + r * cols_, v_.begin() + (r + 1) * cols_);
    return out;
}

Matrix Matrix::from_rows(PrimeModulus m, const std::vector<std::vector<std::uint64_t>>& rows) {
    Matrix out(m, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != out.cols_) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < out.cols_; ++c) {
            if (rows[r][c] >= m.value()) throw Error(ErrorCode::Parse, "matrix entry out of range");
            out.set(r, c, rows[r][c]);
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(m_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.v_[c * rows_ + r] = at(r, c);
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (auto v : v_)
        if (v != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.m_ == b.m_)) throw Error(ErrorCode::ModulusMismatch, "matrix moduli differ");
    if (a.cols_ != b.rows_) throw Error(ErrorCode::LengthMismatch, "matrix shapes incompatible for product");
    Matrix out(a.m_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < a.cols_; ++t) acc = a.m_.add(acc, a.m_.mul(a.at(r, t), b.at(t, c)));
            out.v_[r * out.cols_ + c] = acc;
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (!(a.m_ == b.m_)) throw Error(ErrorCode::ModulusMismatch, "matrix moduli differ");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::LengthMismatch, "matrix shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < a.v_.size(); ++i) out.v_[i] = a.m_.sub(a.v_[i], b.v_[i]);
    return out;
}

Sequence operator*(const Matrix& a, const Sequence& x) {
    if (!(a.m_ == x.modulus())) throw Error(ErrorCode::ModulusMismatch, "matrix and sequence moduli differ");
    if (a.cols_ != x.size()) {
        throw Error(ErrorCode::LengthMismatch, "sequence length " + std::to_string(x.size()) +
                                                   " does not match matrix width " + std::to_string(a.cols_));
    }
    std::vector<std::uint64_t> out(a.rows_, 0);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < a.cols_; ++c) acc = a.m_.add(acc, a.m_.mul(a.at(r, c), x.raw(c)));
        out[r] = acc;
    }
    return Sequence(a.m_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, std::to_string(m.at(r, c)).size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto s = std::to_string(m.at(r, c));
            if (c) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os;
}

RowEchelon reduced_row_echelon(const Matrix& a) {
    const auto m = a.modulus();
    auto rows = a.to_rows();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < rows.size(); ++c) {
        std::size_t pr = lead;
        while (pr < rows.size() && rows[pr][c] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[lead], rows[pr]);
        const auto scale = m.inv(rows[lead][c]);
        for (auto& v : rows[lead]) v = m.mul(v, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c] == 0) continue;
            const auto f = rows[r][c];
            for (std::size_t t = 0; t < a.cols(); ++t) rows[r][t] = m.sub(rows[r][t], m.mul(f, rows[lead][t]));
        }
        pivots.push_back(c);
        ++lead;
    }
    rows.resize(lead);
    Matrix reduced(m, lead, a.cols());
    for (std::size_t r = 0; r < lead; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) reduced.set(r, c, rows[r][c]);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivots.size(); }

Matrix matrix_power(const Matrix& a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::LengthMismatch, "matrix power needs a square matrix");
    auto result = Matrix::identity(a.modulus(), a.rows());
    auto base = a;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

} // namespace fourier
