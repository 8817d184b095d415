// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/order.hpp"

#include <cassert>

namespace gh {

namespace {

// Grevlex restricted to the variable window [lo, hi).
std::strong_ordering grevlex_window(const Monomial& a, const Monomial& b,
                                    std::size_t lo, std::size_t hi) {
    std::uint64_t da = a.degree_window(lo, hi);
    std::uint64_t db = b.degree_window(lo, hi);
    if (da != db) return da <=> db;
    // Reverse lex tiebreak: scan from the last variable backwards; at the
    // first difference the smaller exponent belongs to the larger monomial.
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    const std::size_t n = a.nvars();
    switch (kind) {
    case Kind::lex:
        for (std::size_t i = 0; i < n; ++i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
        }
        return std::strong_ordering::equal;
    case Kind::grevlex:
        return grevlex_window(a, b, 0, n);
    case Kind::block: {
        assert(block_split <= n);
        auto front = grevlex_window(a, b, 0, block_split);
        if (front != std::strong_ordering::equal) return front;
        return grevlex_window(a, b, block_split, n);
    }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::block: return "block(" + std::to_string(block_split) + ")";
    }
    return "?";
}

} // namespace gh
