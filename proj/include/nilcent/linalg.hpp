#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nilcent/scalar.hpp"

namespace nilcent {

// Selects between the OpenMP kernel and the serial reference implementation.
enum class Exec { serial, parallel };

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
bool is_zero(const Vec& v);

// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    void append_row(const Vec& v);

    static Matrix identity(Field f, std::size_t n);
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);

// Exact rank. Over F_p this uses the word-sized elimination kernel; over Q
// fraction-free (Bareiss) elimination on integer rows.
std::size_t rank(const Matrix& m, Exec exec = Exec::parallel);

// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& m);

// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Inverse of a square matrix; throws DivisionByZero if singular.
Matrix inverse(const Matrix& m);

// Rank of a row-major matrix of residues mod p. The matrix is consumed.
std::size_t rank_mod_p(std::vector<std::uint64_t> data, std::size_t rows, std::size_t cols,
                       std::uint64_t p, Exec exec);

// Rank over Q by Bareiss elimination; rows are scaled to integers first.
std::size_t rank_rational_bareiss(const Matrix& m);

}  // namespace nilcent
