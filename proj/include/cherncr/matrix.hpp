#pragma once

#include <stdexcept>
#include <vector>

#include "cherncr/rational.hpp"

namespace cherncr {

// Dense matrix of exact rationals with fraction-free-enough Gaussian
// elimination (plain division, exact over mpq).
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) {
        check(r, c);
        return entries_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return entries_[r * cols_ + c];
    }

    std::size_t rank() const { return RatMatrix(*this).echelonize().first; }

    Rational determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        RatMatrix work(*this);
        auto [rank, det] = work.echelonize();
        return rank == rows_ ? det : Rational(0);
    }

  private:
    // Reduces in place to row echelon form. Returns (rank, product of
    // pivots with row-swap signs), the latter meaningful for square input.
    std::pair<std::size_t, Rational> echelonize() {
        std::size_t pivot_row = 0;
        Rational det = 1;
        for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
            std::size_t sel = pivot_row;
            while (sel < rows_ && at(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != pivot_row) {
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pivot_row, c));
                det = -det;
            }
            det *= at(pivot_row, col);
            for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
                if (at(r, col) == 0) continue;
                Rational f = at(r, col) / at(pivot_row, col);
                for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(pivot_row, c);
            }
            ++pivot_row;
        }
        return {pivot_row, det};
    }

    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct LinearSolveResult {
    enum class Kind { Unique, NoSolution, NonUnique };
    Kind kind;
    std::vector<Rational> solution;  // populated only for Unique
};

// Classifies A x = b exactly by rank comparison and returns the solution
// in the unique case. Works for any shape.
inline LinearSolveResult solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve_linear");
    const std::size_t m = a.rows(), n = a.cols();

    // Augmented elimination with pivot column bookkeeping.
    RatMatrix aug(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n) = b[r];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m && aug.at(sel, col) == 0) ++sel;
        if (sel == m) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c <= n; ++c) std::swap(aug.at(sel, c), aug.at(pivot_row, c));
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pivot_row || aug.at(r, col) == 0) continue;
            Rational f = aug.at(r, col) / aug.at(pivot_row, col);
            for (std::size_t c = col; c <= n; ++c) aug.at(r, c) -= f * aug.at(pivot_row, c);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    for (std::size_t r = pivot_row; r < m; ++r)
        if (aug.at(r, n) != 0) return {LinearSolveResult::Kind::NoSolution, {}};
    if (pivot_cols.size() < n) return {LinearSolveResult::Kind::NonUnique, {}};

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        x[pivot_cols[i]] = aug.at(i, n) / aug.at(i, pivot_cols[i]);
    return {LinearSolveResult::Kind::Unique, std::move(x)};
}

}  // namespace cherncr
