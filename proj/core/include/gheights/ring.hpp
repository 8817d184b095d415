// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gheights/coeff.hpp"
#include "gheights/order.hpp"

namespace gh {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A multivariate polynomial ring k[x_1..x_n]: an ordered list of distinct
/// variable names, a coefficient field, and a monomial order. Immutable and
/// freely shareable between threads.
class PolyRing {
public:
    /// Validates names (identifier grammar, uniqueness) and the variable
    /// count (at most 64, for support masks).
    static RingPtr create(std::vector<std::string> vars, CoefficientField field,
                          MonomialOrder order);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> var_index(const std::string& name) const;

    const CoefficientField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        return order_.compare(a, b);
    }

    /// Structural equality: same variables, field, and order.
    bool same(const PolyRing& other) const;

    std::string describe() const;

    /// True iff name matches letter (letter|digit|"_")*.
    static bool valid_identifier(const std::string& name);

private:
    PolyRing(std::vector<std::string> vars, CoefficientField field, MonomialOrder order)
        : vars_(std::move(vars)), field_(field), order_(order) {}

    std::vector<std::string> vars_;
    CoefficientField field_;
    MonomialOrder order_;
};

/// Convenience: rings share structure iff same(); used for mismatch checks.
void require_same_ring(const PolyRing& a, const PolyRing& b, const char* where);

} // namespace gh
