#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fourier/gf.hpp"

namespace fourier {

/// A fixed-length vector over GF(p). Signals, spectra, codewords and
/// received words are all Sequences.
class Sequence {
public:
    Sequence(PrimeModulus m, std::size_t n) : m_(m), v_(n, 0) {}
    Sequence(PrimeModulus m, std::initializer_list<std::int64_t> values);
    Sequence(PrimeModulus m, std::span<const std::int64_t> values);
    Sequence(PrimeModulus m, std::vector<std::uint64_t> reduced);

    PrimeModulus modulus() const noexcept { return m_; }
    std::size_t size() const noexcept { return v_.size(); }

    Residue operator[](std::size_t i) const { return Residue{static_cast<std::int64_t>(v_[i]), m_}; }
    std::uint64_t raw(std::size_t i) const noexcept { return v_[i]; }
    std::span<const std::uint64_t> values() const noexcept { return v_; }

    void set(std::size_t i, Residue r);
    void set_raw(std::size_t i, std::uint64_t v) noexcept { v_[i] = v; }

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;

    /// Comma-separated base-10 values, e.g. "16,0,1,10,10,1,0".
    std::string to_string() const;
    static Sequence parse(PrimeModulus m, const std::string& text);

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend Sequence operator+(const Sequence& a, const Sequence& b);
    friend Sequence operator-(const Sequence& a, const Sequence& b);
    friend Sequence operator*(Residue s, const Sequence& a);

private:
    PrimeModulus m_;
    std::vector<std::uint64_t> v_;
};

std::ostream& operator<<(std::ostream& os, const Sequence& s);

std::size_t hamming_distance(const Sequence& a, const Sequence& b);

/// Row-major matrix over GF(p).
class Matrix {
public:
    Matrix(PrimeModulus m, std::size_t rows, std::size_t cols)
        : m_(m), rows_(rows), cols_(cols), v_(rows * cols, 0) {}
    Matrix(PrimeModulus m, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static Matrix identity(PrimeModulus m, std::size_t n);

    PrimeModulus modulus() const noexcept { return m_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint64_t at(std::size_t r, std::size_t c) const noexcept { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) noexcept { v_[r * cols_ + c] = v % m_.value(); }

    Sequence row(std::size_t r) const;
    std::vector<std::vector<std::uint64_t>> to_rows() const;
    static Matrix from_rows(PrimeModulus m, const std::vector<std::vector<std::uint64_t>>& rows);

    Matrix transpose() const;
    bool is_zero() const noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Sequence operator*(const Matrix& a, const Sequence& x);

private:
    PrimeModulus m_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> v_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Gauss-Jordan result: the nonzero rows of the reduced row echelon form
/// and their pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(const Matrix& a);
std::size_t rank(const Matrix& a);

Matrix matrix_power(const Matrix& a, std::uint64_t e);

} // namespace fourier
