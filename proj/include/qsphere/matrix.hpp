#pragma once

#include "qsphere/ratfunc.hpp"

#include <optional>
#include <vector>

namespace qsphere {

/// Dense matrix over Q(t). Entry (i, j) is row i, column j.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<RatFunc>& d);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    RatFunc& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const RatFunc& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i * cols_ + j)];
    }

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const RatFunc& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const RatFunc& s) { return a *= s; }
    friend Matrix operator*(const RatFunc& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    Matrix pow(int e) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RatFunc> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
    Matrix reduced;
    std::vector<int> pivots;
    int rank() const noexcept { return static_cast<int>(pivots.size()); }
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
int nullity(const Matrix& m);
/// Basis of {x : m x = 0}, one column vector per entry.
std::vector<std::vector<RatFunc>> null_space(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<std::vector<RatFunc>> solve(const Matrix& m, const std::vector<RatFunc>& b);
RatFunc determinant(Matrix m);

/// Polynomial in x over Q(t); entry i is the coefficient of x^i.
using RatPoly = std::vector<RatFunc>;

void trim(RatPoly& p);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
std::string poly_to_string(const RatPoly& p);

/// det(x I - m), computed by the division-free Berkowitz algorithm.
RatPoly charpoly(const Matrix& m);

}  // namespace qsphere
