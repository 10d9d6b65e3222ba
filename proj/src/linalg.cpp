#include "grstwist/linalg.hpp"

#include <stdexcept>

namespace grstwist {

Mat::Mat(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, FieldElem{0}) {}

void Mat::set_row(std::size_t r, const std::vector<FieldElem>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = row[c];
}

std::vector<FieldElem> Mat::row(std::size_t r) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Mat::append_row(const std::vector<FieldElem>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Mat Mat::rref() const {
    Mat w = *this;
    const Field& f = *field_;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < w.rows_; ++col) {
        std::size_t piv = lead;
        while (piv < w.rows_ && w.at(piv, col).v == 0) ++piv;
        if (piv == w.rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(w.at(lead, c), w.at(piv, c));
        FieldElem scale = f.inv(w.at(lead, col));
        for (std::size_t c = col; c < cols_; ++c) w.at(lead, c) = f.mul(w.at(lead, c), scale);
        for (std::size_t r = 0; r < w.rows_; ++r) {
            if (r == lead || w.at(r, col).v == 0) continue;
            FieldElem factor = w.at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                w.at(r, c) = f.sub(w.at(r, c), f.mul(factor, w.at(lead, c)));
        }
        ++lead;
    }
    w.rows_ = lead;
    w.a_.resize(lead * cols_);
    return w;
}

Mat Mat::nullspace() const {
    Mat r = rref();
    const Field& f = *field_;
    std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0, c = 0; i < r.rows_; ++i) {
        while (c < cols_ && r.at(i, c).v == 0) ++c;
        pivot_of_col[c] = i;
        pivots.push_back(c);
        ++c;
    }
    Mat out(field_, 0, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        std::vector<FieldElem> x(cols_, FieldElem{0});
        x[c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(r.at(i, c));
        out.append_row(x);
    }
    return out;
}

Mat Mat::vstack(const Mat& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("column count mismatch");
    Mat out = *this;
    out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
    out.rows_ += below.rows_;
    return out;
}

Mat Mat::select_cols(const std::vector<std::size_t>& keep) const {
    Mat out(field_, rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (keep[i] >= cols_) throw std::invalid_argument("column index out of range");
            out.at(r, i) = at(r, keep[i]);
        }
    return out;
}

bool Mat::same_row_space(const Mat& o) const {
    if (cols_ != o.cols_ || !field_->same(*o.field_)) return false;
    return rref() == o.rref();
}

FieldElem dot(const Field& f, const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    FieldElem acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

} // namespace grstwist
