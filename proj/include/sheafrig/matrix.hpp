#pragma once

#include <initializer_list>
#include <vector>

#include "sheafrig/rational.hpp"

namespace sheafrig {

// Dense matrix over the rationals.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat row_vector(const std::vector<Rat>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Rat& c) const;
    bool operator==(const Mat& o) const;
    bool is_zero() const;

    std::vector<Rat> row(int i) const;
    void set_row(int i, const std::vector<Rat>& v);
    std::vector<Rat> apply(const std::vector<Rat>& x) const;  // M * x

    // Append the rows of `o` (same column count).
    void stack_rows(const Mat& o);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

// Exact rank via fraction-free (Bareiss) elimination on the integerized
// matrix; no tolerances anywhere.
int rank(const Mat& m);

// In-place reduction to reduced row echelon form. Returns the pivot columns.
std::vector<int> rref_in_place(Mat& m);

// Rows form the canonical (reduced echelon) basis of { x : m * x = 0 }.
Mat kernel_basis(const Mat& m);

// Unique X with X * b = c, where the row space of c lies inside the row
// space of b and b has full row rank. Throws InternalError otherwise.
Mat solve_left_factor(const Mat& b, const Mat& c);

// Unique solution y of a * y = rhs when a is square invertible.
Mat solve_square(const Mat& a, const Mat& rhs);

// Canonical basis: RREF with zero rows dropped.
Mat row_space_basis(const Mat& m);

} // namespace sheafrig
