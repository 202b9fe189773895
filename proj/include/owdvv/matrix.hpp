#pragma once

#include "owdvv/rational.hpp"
#include "owdvv/truncation.hpp"

#include <vector>

namespace owdvv {

// Dense rational matrix, row-major, 0-based internally (callers translate the
// 1-based tensor indices of the theory).
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator*(const Rat& c) const;
    RatMat transposed() const;
    RatMat inverse() const; // throws domain_error when singular
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const RatMat& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Solves A x = b exactly; empty optional when inconsistent. A may be
// rectangular; when underdetermined, free variables are set to zero.
std::optional<std::vector<Rat>> solve_linear_system(RatMat a, std::vector<Rat> b);

// Matrix power series sum_{i>=0} M_i z^i truncated at z-order `order`. Also
// used for z^{-1}-series (the exponent sign is a bookkeeping convention of
// the caller).
class MatSeries {
public:
    MatSeries() = default;
    MatSeries(int n, int order); // zero series
    static MatSeries identity(int n, int order);

    int dim() const { return n_; }
    int order() const { return static_cast<int>(coef_.size()) - 1; }
    RatMat& coef(int i) { return coef_[i]; }
    const RatMat& coef(int i) const { return coef_[i]; }

    MatSeries operator+(const MatSeries& o) const;
    MatSeries operator-(const MatSeries& o) const;
    MatSeries operator*(const MatSeries& o) const;
    MatSeries operator*(const Rat& c) const;
    MatSeries transposed() const;
    MatSeries negated_argument() const; // M(-z)
    MatSeries inverse() const;          // requires invertible constant term
    MatSeries exp() const;              // requires zero constant term
    MatSeries log() const;              // requires constant term Id

    bool operator==(const MatSeries& o) const = default;

private:
    int n_ = 0;
    std::vector<RatMat> coef_;
};

// Coefficients of the bivariate matrix polynomial P(x, y) / (x + y), where
// P is given by its coefficient matrices p[i][j] (of x^i y^j) and vanishes on
// the diagonal x = -y. Throws structural_error when the division is inexact.
std::vector<std::vector<RatMat>> divide_by_sum(const std::vector<std::vector<RatMat>>& p);

} // namespace owdvv
