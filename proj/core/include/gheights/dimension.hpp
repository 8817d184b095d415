// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_DIMENSION_HPP
#define GHEIGHTS_DIMENSION_HPP

#include <string>
#include <vector>

#include "gheights/ideal.hpp"
#include "gheights/matrix.hpp"

namespace gh {

struct DimensionResult {
    // Krull dimension of R/I; -1 for the unit ideal.
    long dim = 0;
    // n - dim for proper I; n for the unit ideal.
    long height = 0;
    // Lexicographically first independent set of maximum size: no
    // leading monomial of the reduced basis is supported inside it.
    std::vector<std::string> witness_independent_set;
};

// Dimension of R/I via independent sets of the leading-term ideal:
// dim = max size of a variable subset meeting the support of no leading
// monomial.  Exhaustive search with dependent-superset pruning; capped
// at 24 variables.
DimensionResult krull_dim(const Ideal& I);

// Height of I, as reported by krull_dim.
long ideal_height(const Ideal& I);

// Minimal generator count of coker(A) localized at the witness ideal Q:
// rows(A) minus the largest t with some t×t minor outside Q.  The 0×0
// minor is 1 and never lies in the proper ideal Q.  Exact when Q is
// prime; for other witnesses it is still well defined.
std::size_t mu_at_prime(const PolyMatrix& A, const Ideal& Q);

} // namespace gh

#endif
