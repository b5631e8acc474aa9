#pragma once

#include "projsys/gf.hpp"

#include <span>
#include <vector>

namespace projsys {

/// Dense row-major matrix over a Field. The field is passed to each operation.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Elem& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Elem operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<Elem> row(int r) noexcept { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const Elem> row(int r) const noexcept {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    void append_row(std::span<const Elem> values);
    void pop_row() noexcept {
        --rows_;
        data_.resize(static_cast<std::size_t>(rows_) * cols_);
    }
    std::vector<Elem> column(int c) const;

    bool operator==(const Matrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduced row-echelon form with zero rows dropped; `pivots[i]` is the pivot column of row i.
struct Echelon {
    Matrix rows;
    std::vector<int> pivots;
    int rank() const noexcept { return rows.rows(); }
};

Echelon rref(const Field& f, const Matrix& m);
int rank(const Field& f, const Matrix& m);

/// Basis (as rows) of {x : m x^T = 0}.
Matrix null_space(const Field& f, const Matrix& m);

/// Reduces `v` in place against an echelon basis; returns true iff v reduces to zero.
bool reduce_against(const Field& f, const Echelon& e, std::span<Elem> v);

/// Scales `v` so its first nonzero entry is 1; returns false for the zero vector.
bool normalize(const Field& f, std::span<Elem> v);

}  // namespace projsys
