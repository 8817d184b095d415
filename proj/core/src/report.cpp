// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/report.hpp"

#include <utility>

#include "gheights/errors.hpp"

namespace gh {

std::string to_string(HypStatus s) {
    switch (s) {
    case HypStatus::verified: return "verified";
    case HypStatus::asserted: return "asserted";
    case HypStatus::unverified: return "unverified";
    case HypStatus::violated: return "violated";
    }
    return "unverified";
}

std::string to_string(Exactness e) {
    return e == Exactness::exact ? "exact" : "conservative";
}

PrimeWitness::PrimeWitness(Ideal ideal, bool asserted_prime, std::string label)
    : ideal_(std::move(ideal)), asserted_(asserted_prime), label_(std::move(label)) {
    if (ideal_.is_unit())
        throw NonProperIdealError("prime witness '" + label_ + "' is the unit ideal");
}

PrimeWitness PrimeWitness::zero_ideal(const RingPtr& ring) {
    PrimeWitness w(Ideal(ring, {}), true, "(0)");
    w.known_prime_ = true;
    return w;
}

PrimeWitness PrimeWitness::irrelevant_maximal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    PrimeWitness w(Ideal(ring, std::move(gens)), true, "m");
    w.known_prime_ = true;
    return w;
}

HypStatus PrimeWitness::primality_status() const {
    if (known_prime_) return HypStatus::verified;
    return asserted_ ? HypStatus::asserted : HypStatus::unverified;
}

BoundReport finalize_report(BoundReport r) {
    r.slack = r.rhs - r.lhs;
    r.holds = (r.lhs <= r.rhs) || r.vacuous;
    return r;
}

HypStatus worst_status(const std::vector<Hypothesis>& hypotheses) {
    HypStatus worst = HypStatus::verified;
    for (const auto& h : hypotheses)
        if (static_cast<int>(h.status) > static_cast<int>(worst)) worst = h.status;
    return worst;
}

} // namespace gh
