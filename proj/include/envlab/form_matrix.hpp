#pragma once

#include <map>
#include <vector>

#include "envlab/form.hpp"

namespace envlab {

/// Matrix of homogeneous forms with degree bookkeeping: entry (i,j) is zero
/// or has degree exactly col_degrees[j] - row_degrees[i].
class FormMatrix {
public:
    FormMatrix(int nvars, std::vector<int> row_degrees, std::vector<int> col_degrees)
        : nvars_(nvars), row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
        entries_.reserve(row_degrees_.size());
        for (int i = 0; i < rows(); ++i) {
            std::vector<HomogeneousForm> row;
            row.reserve(col_degrees_.size());
            for (int j = 0; j < cols(); ++j) {
                row.push_back(HomogeneousForm::zero(nvars_, entry_degree(i, j)));
            }
            entries_.push_back(std::move(row));
        }
    }

    int nvars() const { return nvars_; }
    int rows() const { return static_cast<int>(row_degrees_.size()); }
    int cols() const { return static_cast<int>(col_degrees_.size()); }
    const std::vector<int>& row_degrees() const { return row_degrees_; }
    const std::vector<int>& col_degrees() const { return col_degrees_; }

    int entry_degree(int i, int j) const { return col_degrees_[j] - row_degrees_[i]; }

    const HomogeneousForm& at(int i, int j) const { return entries_[i][j]; }

    void set(int i, int j, HomogeneousForm f) {
        if (f.nvars() != nvars_ || (!f.is_zero() && f.degree() != entry_degree(i, j)))
            throw MathError("FormMatrix::set: entry degree violates the degree grid");
        if (f.degree() != entry_degree(i, j))
            f = HomogeneousForm::zero(nvars_, entry_degree(i, j));
        entries_[i][j] = std::move(f);
    }

private:
    int nvars_;
    std::vector<int> row_degrees_;
    std::vector<int> col_degrees_;
    std::vector<std::vector<HomogeneousForm>> entries_;
};

namespace detail {

/// Determinant of the square submatrix of `rows` x chosen columns, expanding
/// along rows top-down; memoized on (row position, column mask).
inline HomogeneousForm det_rec(const PrimeField& F, const FormMatrix& A, const std::vector<int>& rows,
                               std::size_t row_pos, std::uint32_t col_mask,
                               std::map<std::pair<std::size_t, std::uint32_t>, HomogeneousForm>& memo,
                               int target_degree) {
    if (row_pos == rows.size()) return HomogeneousForm::one(A.nvars());
    const auto key = std::make_pair(row_pos, col_mask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    HomogeneousForm acc = HomogeneousForm::zero(A.nvars(), target_degree);
    int sign = 1;
    int seen = 0;
    for (int j = 0; j < A.cols(); ++j) {
        if (!(col_mask & (1u << j))) continue;
        const HomogeneousForm& e = A.at(rows[row_pos], j);
        if (!e.is_zero()) {
            HomogeneousForm sub = det_rec(F, A, rows, row_pos + 1, col_mask & ~(1u << j), memo,
                                          target_degree - e.degree());
            HomogeneousForm prod = form_mul(F, e, sub);
            if (sign < 0) prod = form_scale(F, prod, F.neg(1));
            if (acc.degree() != prod.degree())
                throw MathError("FormMatrix determinant: inconsistent degree grid");
            acc = form_add(F, acc, prod);
        }
        sign = -sign;
        ++seen;
    }
    (void)seen;
    memo.emplace(key, acc);
    return acc;
}

} // namespace detail

/// Determinant of the square matrix formed by the given rows (all columns).
inline HomogeneousForm form_det(const PrimeField& F, const FormMatrix& A, const std::vector<int>& rows) {
    if (static_cast<int>(rows.size()) != A.cols())
        throw MathError("form_det: need exactly cols() rows");
    int target = 0;
    for (int j = 0; j < A.cols(); ++j) target += A.col_degrees()[j];
    for (int i : rows) target -= A.row_degrees()[i];
    std::map<std::pair<std::size_t, std::uint32_t>, HomogeneousForm> memo;
    const std::uint32_t full = (A.cols() >= 32) ? ~0u : ((1u << A.cols()) - 1);
    if (A.cols() >= 32) throw MathError("form_det: matrices this large are not supported");
    return detail::det_rec(F, A, rows, 0, full, memo, target);
}

/// Determinant of the k x k minor of a (k+1) x k matrix obtained by deleting
/// one row (1-based index). The result has degree sum(b_j) - sum_{i != omit} a_i.
inline HomogeneousForm minor_determinant(const PrimeField& F, const FormMatrix& A, int omit_row) {
    if (A.rows() != A.cols() + 1)
        throw MathError("minor_determinant: matrix must have one more row than columns");
    if (omit_row < 1 || omit_row > A.rows())
        throw MathError("minor_determinant: omit_row out of range");
    std::vector<int> rows;
    rows.reserve(A.cols());
    for (int i = 0; i < A.rows(); ++i)
        if (i != omit_row - 1) rows.push_back(i);
    return form_det(F, A, rows);
}

} // namespace envlab
