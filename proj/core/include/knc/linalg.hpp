#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knc/cyclo.hpp"

namespace knc {

// Dense row-major matrix over cyclotomic fields. Elimination skips zero entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<CycloElem>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    CycloElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<CycloElem> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<CycloElem>& v);
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix transpose() const;
    Matrix conj_transpose() const;
    CycloElem trace() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    Matrix pow(long e) const;  // negative exponents invert
    Matrix inverse() const;    // throws DivisionByZero if singular
    std::size_t rank() const;
    CycloElem determinant() const;
    // Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<CycloElem>> nullspace() const;
    // Solves A X = B for square nonsingular A.
    Matrix solve(const Matrix& b) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const CycloElem& s);

    std::string debug_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycloElem> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const CycloElem& s);
std::vector<CycloElem> operator*(const Matrix& a, const std::vector<CycloElem>& v);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace knc
