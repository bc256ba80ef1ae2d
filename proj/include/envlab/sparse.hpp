#pragma once

#include <queue>
#include <utility>
#include <vector>

#include "envlab/field.hpp"

namespace envlab {

/// Sparse row: (column, coefficient) pairs, strictly increasing columns,
/// nonzero coefficients.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental row-echelon form over F_p for wide, very sparse systems.
/// Rows are kept in (non-reduced) echelon shape: each stored row starts at
/// its pivot column and is normalized to leading coefficient 1. Reduction of
/// an incoming row walks its support in column order through a dense
/// accumulator, so cost scales with fill-in rather than with width.
class SparseEchelon {
public:
    SparseEchelon(const PrimeField& F, int ncols)
        : F_(F), ncols_(ncols), pivot_of_col_(static_cast<std::size_t>(ncols), -1),
          acc_(static_cast<std::size_t>(ncols), 0) {}

    int cols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Insert a row; returns true when it is independent of the span so far.
    bool insert(const SparseRow& row) {
        SparseRow reduced;
        const int pivot_col = reduce(row, reduced);
        if (pivot_col < 0) return false;
        pivot_of_col_[pivot_col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(reduced));
        return true;
    }

    /// Does the row already lie in the span? Leaves the echelon untouched.
    bool in_span(const SparseRow& row) const {
        SparseRow reduced;
        return reduce(row, reduced) < 0;
    }

private:
    // Walks the accumulated support in column order; returns the pivot column
    // of the reduced row (normalized into `out`), or -1 if it reduces to zero.
    // Scratch state (acc_, heap_) is zeroed again before returning.
    int reduce(const SparseRow& row, SparseRow& out) const {
        auto& heap = heap_;
        for (const auto& [c, v] : row) {
            if (v == 0) continue;
            const Scalar before = acc_[c];
            acc_[c] = F_.add(before, v);
            if (before == 0) heap.push(c);
        }
        int pivot_col = -1;
        while (!heap.empty()) {
            const int c = heap.top();
            heap.pop();
            if (acc_[c] == 0) continue;
            const int pr = pivot_of_col_[c];
            if (pr < 0) {
                pivot_col = c;
                break;
            }
            const Scalar f = acc_[c];
            acc_[c] = 0;
            for (const auto& [tc, tv] : rows_[pr]) {
                if (tc == c) continue; // leading entry, already cancelled
                const Scalar before = acc_[tc];
                acc_[tc] = F_.sub(before, F_.mul(f, tv));
                if (before == 0 && acc_[tc] != 0) heap.push(tc);
            }
        }
        if (pivot_col < 0) return -1;
        out.clear();
        const Scalar lead_inv = F_.inv(acc_[pivot_col]);
        out.emplace_back(pivot_col, 1);
        acc_[pivot_col] = 0;
        while (!heap.empty()) {
            const int c = heap.top();
            heap.pop();
            if (acc_[c] == 0) continue;
            out.emplace_back(c, F_.mul(acc_[c], lead_inv));
            acc_[c] = 0;
        }
        return pivot_col;
    }

    const PrimeField& F_;
    int ncols_;
    std::vector<int> pivot_of_col_;
    std::vector<SparseRow> rows_;
    mutable std::vector<Scalar> acc_;
    mutable std::priority_queue<int, std::vector<int>, std::greater<int>> heap_;
};

} // namespace envlab
