#ifndef GRSTWIST_LINALG_HPP
#define GRSTWIST_LINALG_HPP

#include "grstwist/galois.hpp"

#include <cstddef>
#include <vector>

namespace grstwist {

// Dense matrix over a Field with exact arithmetic. Rows are codewords
// throughout this project, so the "kernel" is always the right kernel
// {x : M x^T = 0}.
class Mat {
public:
    Mat(FieldRef field, std::size_t rows, std::size_t cols);

    const Field& field() const { return *field_; }
    FieldRef field_ref() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    FieldElem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set_row(std::size_t r, const std::vector<FieldElem>& row);
    std::vector<FieldElem> row(std::size_t r) const;
    void append_row(const std::vector<FieldElem>& row);

    // reduced row echelon form with zero rows dropped: the canonical basis
    // of the row space
    Mat rref() const;
    std::size_t rank() const { return rref().rows(); }
    // rows spanning {x : M x^T = 0}
    Mat nullspace() const;

    Mat vstack(const Mat& below) const;
    Mat select_cols(const std::vector<std::size_t>& keep) const;

    bool same_row_space(const Mat& o) const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    FieldRef field_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> a_;
};

FieldElem dot(const Field& f, const std::vector<FieldElem>& a, const std::vector<FieldElem>& b);

} // namespace grstwist

#endif
