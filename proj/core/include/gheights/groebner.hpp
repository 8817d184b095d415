// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_GROEBNER_HPP
#define GHEIGHTS_GROEBNER_HPP

#include <vector>

#include "gheights/polynomial.hpp"

namespace gh {

// Normal form of f modulo the list G: the largest reducible term is
// always rewritten by the first divisor in G's stored order, so the
// result is deterministic.  No term of the result is divisible by the
// leading monomial of any element of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens);

// S-polynomial of two nonzero polynomials, with both summands scaled
// monic so the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with the coprime-leading-term and chain
// criteria.  The pair queue is processed by (lcm total degree,
// insertion index), so the run is deterministic.  Zero generators are
// discarded.  Honors resource_limits(); raises ResourceLimitError when
// the pair, degree, or basis cap is exceeded.  Returns the unique
// reduced basis: monic, pairwise irreducible, sorted by increasing
// leading monomial.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens);

// Minimalizes and tail-reduces an already-computed basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

} // namespace gh

#endif
