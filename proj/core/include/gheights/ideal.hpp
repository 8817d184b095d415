// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_IDEAL_HPP
#define GHEIGHTS_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "gheights/polynomial.hpp"

namespace gh {

// An ideal given by generators, with a lazily computed reduced basis.
// Values are cheap to copy; copies share the cache.  Concurrent readers
// see either no cached basis or the complete one, never a partial one.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    // Nonzero generators, in construction order.
    const std::vector<Polynomial>& generators() const { return gens_; }
    // The unique reduced basis for the ring's order: monic, pairwise
    // irreducible, sorted by increasing leading monomial.
    const std::vector<Polynomial>& basis() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    // Containment of every generator of other.
    bool contains(const Ideal& other) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    // True when the ideal has a homogeneous generating set, decided on
    // the reduced basis.
    bool is_homogeneous() const;
    bool equals(const Ideal& other) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::once_flag flag;
        std::vector<Polynomial> basis;
    };
    std::shared_ptr<Cache> cache_;
};

// The ideal generated by the union of the generators.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

} // namespace gh

#endif
