// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace gh {

/// A power product, stored as one exponent per ring variable. Exponents are
/// 32-bit; products that would overflow a single exponent raise
/// ResourceLimitError rather than wrapping.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t nvars) {
        return Monomial(std::vector<std::uint32_t>(nvars, 0));
    }

    std::size_t nvars() const { return exps_.size(); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }

    std::uint64_t total_degree() const;
    /// Degree restricted to the variable window [lo, hi).
    std::uint64_t degree_window(std::size_t lo, std::size_t hi) const;

    bool is_unit() const;

    Monomial mul(const Monomial& other) const;
    /// True iff this divides m componentwise.
    bool divides(const Monomial& m) const;
    /// this / d; requires d.divides(*this).
    Monomial div(const Monomial& d) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    /// Bit i set iff variable i occurs. Rings are capped at 64 variables.
    std::uint64_t support_mask() const;

    bool operator==(const Monomial& other) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

} // namespace gh
