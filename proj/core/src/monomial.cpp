// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "gheights/errors.hpp"

namespace gh {

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
}

std::uint64_t Monomial::degree_window(std::size_t lo, std::size_t hi) const {
    std::uint64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += exps_[i];
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::mul(const Monomial& other) const {
    assert(exps_.size() == other.exps_.size());
    std::vector<std::uint32_t> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t s = std::uint64_t(exps_[i]) + other.exps_[i];
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw ResourceLimitError("monomial exponent overflow");
        out[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& m) const {
    assert(exps_.size() == m.exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::div(const Monomial& d) const {
    assert(d.divides(*this));
    std::vector<std::uint32_t> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] - d.exps_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.exps_.size() == b.exps_.size());
    std::vector<std::uint32_t> out(a.exps_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(out));
}

bool Monomial::coprime(const Monomial& other) const {
    assert(exps_.size() == other.exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

std::uint64_t Monomial::support_mask() const {
    assert(exps_.size() <= 64);
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0) m |= std::uint64_t(1) << i;
    return m;
}

} // namespace gh
