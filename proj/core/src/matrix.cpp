// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/matrix.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <utility>

#include "gheights/errors.hpp"

namespace gh {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatchError("matrix entry count does not match its shape");
    for (const auto& e : entries_) require_same_ring(*ring_, *e.ring(), "PolyMatrix");
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::from_int(ring, 1));
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return entries_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
    assert(r < rows_ && c < cols_);
    require_same_ring(*ring_, *p.ring(), "PolyMatrix::set");
    entries_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& other) const {
    require_same_ring(*ring_, *other.ring_, "PolyMatrix::mul");
    if (cols_ != other.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    PolyMatrix out(ring_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < other.cols_; ++c) {
            Polynomial acc(ring_);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc.add(at(r, k).mul(other.at(k, c)));
            out.set(r, c, std::move(acc));
        }
    }
    return out;
}

PolyMatrix PolyMatrix::augment_column(const std::vector<Polynomial>& column) const {
    if (column.size() != rows_)
        throw DimensionMismatchError("augmented column length must equal the row count");
    PolyMatrix out(ring_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
        out.set(r, cols_, column[r]);
    }
    return out;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
    assert(c < cols_);
    std::vector<Polynomial> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
    assert(r < rows_);
    std::vector<Polynomial> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::entries_in_max_ideal() const {
    for (const auto& e : entries_)
        if (!e.in_max_ideal()) return false;
    return true;
}

bool PolyMatrix::equals(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].equals(other.entries_[i])) return false;
    return true;
}

namespace {

// Index subsets of {0..limit-1} of the given size, in lexicographic
// order of the index vector.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t limit, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (size > limit) return out;
    std::vector<std::size_t> cur(size);
    for (std::size_t i = 0; i < size; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (size == 0) break;
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (cur[i] != limit - size + i) break;
            if (i == 0) return out;
        }
        if (cur[i] == limit - size + i) break;
        ++cur[i];
        for (std::size_t j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

class MinorTable {
public:
    explicit MinorTable(const PolyMatrix& A) : A_(A) {}

    Polynomial det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        assert(rows.size() == cols.size());
        std::uint64_t rmask = 0, cmask = 0;
        for (std::size_t r : rows) rmask |= std::uint64_t{1} << r;
        for (std::size_t c : cols) cmask |= std::uint64_t{1} << c;
        return det_masked(rmask, cmask, rows, cols);
    }

private:
    Polynomial det_masked(std::uint64_t rmask, std::uint64_t cmask,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
        if (rows.empty()) return Polynomial::from_int(A_.ring(), 1);
        auto key = std::make_pair(rmask, cmask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        // Expansion along the first listed row.
        std::size_t r0 = rows.front();
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        Polynomial acc(A_.ring());
        bool positive = true;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Polynomial& entry = A_.at(r0, cols[j]);
            if (!entry.is_zero()) {
                std::vector<std::size_t> sub_cols;
                sub_cols.reserve(cols.size() - 1);
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (k != j) sub_cols.push_back(cols[k]);
                Polynomial minor = det_masked(rmask & ~(std::uint64_t{1} << r0),
                                              cmask & ~(std::uint64_t{1} << cols[j]), sub_rows,
                                              sub_cols);
                Polynomial contribution = entry.mul(minor);
                acc = positive ? acc.add(contribution) : acc.sub(contribution);
            }
            positive = !positive;
        }
        memo_.emplace(key, acc);
        return acc;
    }

    const PolyMatrix& A_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

} // namespace

std::vector<Polynomial> minors(const PolyMatrix& A, std::size_t t) {
    if (t == 0) return {Polynomial::from_int(A.ring(), 1)};
    if (t > A.rows() || t > A.cols()) return {};
    if (t > 8) throw ResourceLimitError("minor size cap (8) exceeded");
    if (A.rows() > 64 || A.cols() > 64)
        throw ResourceLimitError("minor enumeration supports at most 64 rows and columns");
    MinorTable table(A);
    std::vector<Polynomial> out;
    for (const auto& rows : index_subsets(A.rows(), t))
        for (const auto& cols : index_subsets(A.cols(), t)) out.push_back(table.det(rows, cols));
    return out;
}

std::size_t matrix_rank(const PolyMatrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    std::vector<std::vector<Polynomial>> m;
    m.reserve(A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r) m.push_back(A.row(r));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < A.rows() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == A.rows()) continue;
        std::swap(m[rank], m[pivot]);
        // Fraction-free clearing: scale then subtract stays in the ring
        // and preserves rank over the fraction field.
        for (std::size_t r = rank + 1; r < A.rows(); ++r) {
            if (m[r][c].is_zero()) continue;
            Polynomial factor = m[r][c];
            for (std::size_t k = c; k < A.cols(); ++k)
                m[r][k] = m[r][k].mul(m[rank][c]).sub(m[rank][k].mul(factor));
        }
        ++rank;
    }
    return rank;
}

} // namespace gh
