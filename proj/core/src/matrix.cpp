#include "mdpconv/matrix.hpp"

#include <algorithm>

namespace mdpconv {

namespace {

void check_same_field(const Mat& a, const Mat& b) {
    if (!a.field().same_field(b.field())) throw FieldMismatchError();
}

}  // namespace

Mat mat_mul(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows())
        throw InvalidArgumentError("matrix product dimension mismatch");
    const Field& f = a.field();
    Mat out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            Elt v = a.at(i, t);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elt w = b.at(t, j);
                if (w != 0) out.set(i, j, f.add(out.at(i, j), f.mul(v, w)));
            }
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgumentError("matrix sum dimension mismatch");
    const Field& f = a.field();
    Mat out(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, f.add(a.at(i, j), b.at(i, j)));
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
    return out;
}

Mat hconcat(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows())
        throw InvalidArgumentError("hconcat row mismatch");
    Mat out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

Mat vconcat(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols())
        throw InvalidArgumentError("vconcat column mismatch");
    Mat out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

Mat rref(const Mat& m, std::size_t* out_rank) {
    const Field& f = m.field();
    Mat a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Elt tmp = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        Elt pinv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a.set(r, j, f.mul(a.at(r, j), pinv));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            Elt v = a.at(i, c);
            if (v == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(v, a.at(r, j))));
        }
        ++r;
    }
    if (out_rank != nullptr) *out_rank = r;
    return a;
}

std::size_t rank(const Mat& m) {
    const Field& f = m.field();
    Mat a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = c; j < a.cols(); ++j) {
                Elt tmp = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        Elt pinv = f.inv(a.at(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            Elt v = a.at(i, c);
            if (v == 0) continue;
            Elt scale = f.mul(v, pinv);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(scale, a.at(r, j))));
        }
        ++r;
    }
    return r;
}

Elt det(const Mat& m) {
    if (m.rows() != m.cols())
        throw InvalidArgumentError("determinant of a non-square matrix");
    const Field& f = m.field();
    Mat a = m;
    std::size_t n = a.rows();
    Elt d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j) {
                Elt tmp = a.at(c, j);
                a.set(c, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
            d = f.neg(d);
        }
        Elt pv = a.at(c, c);
        d = f.mul(d, pv);
        Elt pinv = f.inv(pv);
        for (std::size_t i = c + 1; i < n; ++i) {
            Elt v = a.at(i, c);
            if (v == 0) continue;
            Elt scale = f.mul(v, pinv);
            for (std::size_t j = c; j < n; ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(scale, a.at(c, j))));
        }
    }
    return d;
}

Mat kernel(const Mat& m) {
    const Field& f = m.field();
    std::size_t r = 0;
    Mat e = rref(m, &r);
    std::size_t n = m.cols();
    // pivot column per echelon row
    std::vector<std::size_t> pivot_col(r);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (c < n && e.at(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Mat basis(f, n - r, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.set(row, c, 1);
        for (std::size_t i = 0; i < r; ++i)
            if (pivot_col[i] < c) basis.set(row, pivot_col[i], f.neg(e.at(i, c)));
        ++row;
    }
    return rref(basis);
}

Mat solve(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw InvalidArgumentError("solve dimension mismatch");
    std::size_t r = 0;
    Mat aug = rref(hconcat(a, b), &r);
    if (r != a.rows()) throw RankDeficiencyError("singular system");
    Mat x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(i, j, aug.at(i, a.cols() + j));
    return x;
}

Mat submatrix(const Mat& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx) {
    auto check = [](const std::vector<std::size_t>& idx, std::size_t limit,
                    const char* what) {
        std::size_t prev = 0;
        for (std::size_t v : idx) {
            if (v < 1 || v > limit)
                throw InvalidArgumentError(std::string(what) +
                                           " index out of range");
            if (v <= prev)
                throw InvalidArgumentError(
                    std::string(what) + " indices must be strictly increasing");
            prev = v;
        }
    };
    check(row_idx, m.rows(), "row");
    check(col_idx, m.cols(), "column");
    Mat out(m.field(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.set(i, j, m.at(row_idx[i] - 1, col_idx[j] - 1));
    return out;
}

}  // namespace mdpconv
