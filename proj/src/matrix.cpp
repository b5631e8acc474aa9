#include "projsys/matrix.hpp"

#include "projsys/error.hpp"

namespace projsys {

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != cols_) throw Error(ErrorCode::MixedAmbient, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::vector<Elem> Matrix::column(int c) const {
    std::vector<Elem> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Echelon rref(const Field& f, const Matrix& m) {
    Matrix a = m;
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
        int sel = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (a(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != lead)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(lead, j));
        const Elem inv = f.inv(a(lead, c));
        for (int j = c; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), inv);
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c) == 0) continue;
            const Elem factor = f.neg(a(r, c));
            for (int j = c; j < a.cols(); ++j) a(r, j) = f.axpy(factor, a(lead, j), a(r, j));
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix reduced(0, a.cols());
    for (int r = 0; r < lead; ++r) reduced.append_row(a.row(r));
    return {std::move(reduced), std::move(pivots)};
}

int rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

Matrix null_space(const Field& f, const Matrix& m) {
    const Echelon e = rref(f, m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivots) is_pivot[c] = true;
    Matrix basis(0, n);
    std::vector<Elem> v(n);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = f.neg(e.rows(i, free));
        basis.append_row(v);
    }
    return basis;
}

bool reduce_against(const Field& f, const Echelon& e, std::span<Elem> v) {
    for (int i = 0; i < e.rank(); ++i) {
        const int c = e.pivots[i];
        if (v[c] == 0) continue;
        const Elem factor = f.neg(v[c]);
        const auto row = e.rows.row(i);
        for (std::size_t j = c; j < v.size(); ++j) v[j] = f.axpy(factor, row[j], v[j]);
    }
    for (Elem x : v)
        if (x != 0) return false;
    return true;
}

bool normalize(const Field& f, std::span<Elem> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != 1) {
            const Elem inv = f.inv(v[i]);
            for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], inv);
        }
        return true;
    }
    return false;
}

}  // namespace projsys
