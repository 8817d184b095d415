// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/dimension.hpp"

#include <algorithm>
#include <cstdint>

#include "gheights/errors.hpp"

namespace gh {
namespace {

struct IndependentSetSearch {
    std::vector<std::uint64_t> lead_supports;
    std::size_t nvars = 0;
    std::uint64_t best_mask = 0;
    std::size_t best_size = 0;

    bool independent(std::uint64_t candidate) const {
        for (std::uint64_t s : lead_supports)
            if ((s & ~candidate) == 0) return false;
        return true;
    }

    // Depth-first over variables in increasing index, include before
    // exclude, so the first maximum-size set found is the
    // lexicographically first one.  Branches whose inclusion already
    // traps a leading support are pruned: every superset stays
    // dependent.
    void search(std::size_t var, std::uint64_t chosen, std::size_t size) {
        if (var == nvars) {
            // Strict improvement only: the first maximum-size set wins.
            if (size > best_size) {
                best_size = size;
                best_mask = chosen;
            }
            return;
        }
        std::uint64_t with = chosen | (std::uint64_t{1} << var);
        if (independent(with)) search(var + 1, with, size + 1);
        // Skip the exclude branch when it cannot beat the best.
        if (size + (nvars - var - 1) > best_size) search(var + 1, chosen, size);
    }
};

} // namespace

DimensionResult krull_dim(const Ideal& I) {
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->nvars();
    if (n > 24) throw ResourceLimitError("independent-set search supports at most 24 variables");

    const auto& gb = I.basis();
    DimensionResult result;
    if (I.is_unit()) {
        result.dim = -1;
        result.height = static_cast<long>(n);
        return result;
    }

    IndependentSetSearch search;
    search.nvars = n;
    for (const auto& g : gb) {
        std::uint64_t support = g.leading_monomial().support_mask();
        if (std::find(search.lead_supports.begin(), search.lead_supports.end(), support) ==
            search.lead_supports.end())
            search.lead_supports.push_back(support);
    }
    search.search(0, 0, 0);

    // The empty set is independent for every proper ideal, so the
    // search always terminates with a valid witness.
    result.dim = static_cast<long>(search.best_size);
    result.height = static_cast<long>(n) - result.dim;
    for (std::size_t i = 0; i < n; ++i)
        if (search.best_mask & (std::uint64_t{1} << i))
            result.witness_independent_set.push_back(ring->variable(i));
    return result;
}

long ideal_height(const Ideal& I) { return krull_dim(I).height; }

std::size_t mu_at_prime(const PolyMatrix& A, const Ideal& Q) {
    require_same_ring(*A.ring(), *Q.ring(), "mu_at_prime");
    if (Q.is_unit()) throw NonProperIdealError("mu_at_prime requires a proper witness ideal");
    const std::size_t n = A.rows();
    std::size_t tmax = std::min(A.rows(), A.cols());
    for (std::size_t t = tmax; t >= 1; --t) {
        for (const auto& minor : minors(A, t)) {
            if (!Q.contains(minor)) return n - t;
        }
    }
    return n;
}

} // namespace gh
