// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "gheights/monomial.hpp"

namespace gh {

/// A total, multiplicative monomial order with 1 as its minimum.
///
/// Three kinds are supported:
///  - lex:     compare exponents variable by variable, first difference wins.
///  - grevlex: higher total degree wins; on ties the monomial with the
///             smaller exponent in the last differing variable is larger.
///  - block:   an elimination order. Variables 0..block_split-1 form the
///             front block and are compared first (by grevlex); the back
///             block breaks ties (by grevlex). Any monomial that involves a
///             front variable is larger than every monomial in back
///             variables alone, so a Groebner basis element whose leading
///             monomial avoids the front block lies in the back subring.
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };

    Kind kind = Kind::grevlex;
    /// Only meaningful for block orders: number of front (eliminated) variables.
    std::size_t block_split = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(std::size_t split) { return {Kind::block, split}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    std::string name() const;

    bool operator==(const MonomialOrder& other) const = default;
};

} // namespace gh
