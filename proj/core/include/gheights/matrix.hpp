// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_MATRIX_HPP
#define GHEIGHTS_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "gheights/polynomial.hpp"

namespace gh {

// Rectangular matrix of polynomials over one ring, row-major.  Either
// dimension may be zero.
class PolyMatrix {
public:
    // All entries initialized to zero.
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    // entries.size() must equal rows*cols.
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    static PolyMatrix identity(const RingPtr& ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Polynomial p);

    PolyMatrix transpose() const;
    PolyMatrix mul(const PolyMatrix& other) const;
    // This matrix with the extra column appended on the right.
    PolyMatrix augment_column(const std::vector<Polynomial>& column) const;
    std::vector<Polynomial> column(std::size_t c) const;
    std::vector<Polynomial> row(std::size_t r) const;

    bool is_zero() const;
    // Every entry has zero constant term.
    bool entries_in_max_ideal() const;
    bool equals(const PolyMatrix& other) const;

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

// All t×t minors by cofactor expansion with a memo shared across the
// call, enumerated by row index sets then column index sets, both in
// lexicographic order.  t = 0 yields [1]; t beyond the matrix yields [].
// Zero minors are kept so positions stay predictable.
std::vector<Polynomial> minors(const PolyMatrix& A, std::size_t t);

// The largest t with a nonzero t×t minor, computed by fraction-free
// elimination over the fraction field.  No resource caps apply.
std::size_t matrix_rank(const PolyMatrix& A);

} // namespace gh

#endif
