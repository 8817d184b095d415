// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_FREE_MODULE_HPP
#define GHEIGHTS_FREE_MODULE_HPP

#include <cstddef>
#include <vector>

#include "gheights/matrix.hpp"
#include "gheights/polynomial.hpp"

namespace gh {

// An element of R^rank with a fixed component count.
class FreeModuleElement {
public:
    FreeModuleElement(RingPtr ring, std::vector<Polynomial> components);
    static FreeModuleElement zero(const RingPtr& ring, std::size_t rank);
    static FreeModuleElement unit(const RingPtr& ring, std::size_t rank, std::size_t index);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return components_.size(); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t i) const { return components_[i]; }

    FreeModuleElement add(const FreeModuleElement& other) const;
    // Sum of componentwise products; lengths must agree.
    Polynomial dot(const std::vector<Polynomial>& other) const;
    bool is_zero() const;
    // Every component has zero constant term.
    bool entries_in_max_ideal() const;
    bool equals(const FreeModuleElement& other) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> components_;
};

// Kernel of the map R^cols -> R^rows that A defines on column vectors:
// a cols × k matrix whose columns generate the syzygies of A's columns.
// Computed by a basis over R^(rows+cols) under a position-over-term
// order with lower components dominant, so the first block is
// eliminated; basis elements supported only on the last block descend
// to kernel generators.  A zero-column result means the map is
// injective.  Always satisfies A · kernel(A) = 0.
PolyMatrix kernel(const PolyMatrix& A);

// True when v lies in the column span of the columns of gens (module
// membership via reduction against a basis of the span).
bool column_span_contains(const PolyMatrix& gens, const std::vector<Polynomial>& v);

} // namespace gh

#endif
