#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lpc/polynomial.hpp"
#include "lpc/rational.hpp"

namespace lpc {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalMatrix identity_matrix(std::size_t n);
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
Rational trace(const RationalMatrix& a);
bool is_zero(const RationalMatrix& a);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> b);

/// Characteristic polynomial det(lambda*I - a) coefficients, lowest power first (monic, size n+1).
std::vector<Rational> characteristic_coefficients(const RationalMatrix& a);

/// Symbolic rank over the fraction field by Bareiss fraction-free elimination with full pivoting.
std::size_t bareiss_rank(PolynomialMatrix m);
/// Determinant by Bareiss elimination; requires a square matrix.
Polynomial bareiss_determinant(PolynomialMatrix m);
RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point);

}  // namespace lpc
