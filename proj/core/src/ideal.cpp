// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/ideal.hpp"

#include <utility>

#include "gheights/errors.hpp"
#include "gheights/groebner.hpp"

namespace gh {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(*ring_, *g.ring(), "Ideal");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::basis() const {
    std::call_once(cache_->flag, [this] { cache_->basis = groebner_basis(gens_); });
    return cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    require_same_ring(*ring_, *f.ring(), "normal_form");
    return gh::normal_form(f, basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    require_same_ring(*ring_, *other.ring_, "contains");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    const auto& gb = basis();
    return gb.size() == 1 && gb.front().is_one();
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : basis())
        if (!g.is_homogeneous()) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    if (!ring_->same(*other.ring_)) return false;
    const auto& a = basis();
    const auto& b = other.basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].equals(b[i])) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring(), "ideal_sum");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

} // namespace gh
