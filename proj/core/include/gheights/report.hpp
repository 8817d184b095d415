// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_REPORT_HPP
#define GHEIGHTS_REPORT_HPP

#include <string>
#include <vector>

#include "gheights/ideal.hpp"

namespace gh {

enum class HypStatus { verified, asserted, unverified, violated };

std::string to_string(HypStatus s);

struct Hypothesis {
    std::string name;
    HypStatus status = HypStatus::unverified;
};

// A (claimed) prime ideal used to localize a check.  Properness is
// verified at construction; primality never is.  The factory witnesses
// for the zero ideal and the ideal of all variables are genuinely
// prime in a polynomial ring and count as verified.
class PrimeWitness {
public:
    PrimeWitness(Ideal ideal, bool asserted_prime, std::string label);
    static PrimeWitness zero_ideal(const RingPtr& ring);
    static PrimeWitness irrelevant_maximal(const RingPtr& ring);

    const Ideal& ideal() const { return ideal_; }
    const std::string& label() const { return label_; }
    bool asserted() const { return asserted_; }
    bool known_prime() const { return known_prime_; }
    HypStatus primality_status() const;

private:
    Ideal ideal_;
    bool asserted_;
    bool known_prime_ = false;
    std::string label_;
};

enum class Exactness { exact, conservative };

std::string to_string(Exactness e);

// One executed bound check.  holds is (lhs <= rhs) or vacuous; exact
// means every ideal whose height or dimension entered the comparison
// was homogeneous, so the global numbers agree with the local ones the
// bound is really about.
struct BoundReport {
    std::string theorem_id;
    std::vector<Hypothesis> hypotheses;
    long lhs = 0;
    long rhs = 0;
    long slack = 0;
    bool holds = false;
    bool vacuous = false;
    Exactness exactness = Exactness::conservative;
    std::vector<std::string> notes;
};

// Fills the derived fields (slack, holds) from lhs/rhs/vacuous.
BoundReport finalize_report(BoundReport r);

// The weakest status present: verified < asserted < unverified <
// violated.  verified when the list is empty.
HypStatus worst_status(const std::vector<Hypothesis>& hypotheses);

} // namespace gh

#endif
