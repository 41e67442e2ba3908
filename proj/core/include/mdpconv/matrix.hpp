#pragma once

#include <cstddef>
#include <vector>

#include "mdpconv/field.hpp"

namespace mdpconv {

// Dense matrix over a Field.  The field object is borrowed and must outlive
// the matrix; descriptors keep it alive via shared_ptr.
class Mat {
  public:
    Mat(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(const Field& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elt at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elt v) { a_[r * cols_ + c] = v; }

    const std::vector<Elt>& entries() const { return a_; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ &&
               field_->same_field(*o.field_);
    }

  private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Elt> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
// [a | b] side by side (same row count).
Mat hconcat(const Mat& a, const Mat& b);
// a on top of b (same column count).
Mat vconcat(const Mat& a, const Mat& b);

// Gaussian elimination with deterministic pivoting (first nonzero row in
// column order), so every result below is canonical.
std::size_t rank(const Mat& m);

// Reduced row echelon form; optionally reports the rank.
Mat rref(const Mat& m, std::size_t* out_rank = nullptr);

// Determinant of a square matrix.  Throws InvalidArgumentError otherwise.
Elt det(const Mat& m);

// Right kernel basis {x : m x^T = 0}, one vector per row, returned in
// reduced echelon form (canonical).  May have zero rows.
Mat kernel(const Mat& m);

// Solves A X = B for square invertible A.  Throws RankDeficiencyError when
// A is singular.
Mat solve(const Mat& a, const Mat& b);

// Submatrix selection with 1-based, strictly increasing index lists.
// Throws InvalidArgumentError on out-of-range or non-increasing indices.
Mat submatrix(const Mat& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx);

}  // namespace mdpconv
