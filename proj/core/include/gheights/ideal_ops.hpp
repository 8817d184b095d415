// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_IDEAL_OPS_HPP
#define GHEIGHTS_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "gheights/ideal.hpp"

namespace gh {

// I ∩ k[remaining variables], computed with a block elimination order
// that puts front_vars first.  The result lives in a new ring on the
// remaining variables; its order keeps the original kind (lex stays
// lex, anything else becomes grevlex).  Eliminating nothing returns I
// unchanged.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_vars);

// I ∩ J via the auxiliary-variable construction t·I + (1−t)·J followed
// by eliminating t.
Ideal intersect(const Ideal& I, const Ideal& J);

// I : J^∞, as the intersection over generators g of J of the single
// saturations I : g^∞, each computed by eliminating t from
// I + (1 − t·g).  Removes exactly the primary components whose primes
// contain J.  J must be nonzero.
Ideal saturate(const Ideal& I, const Ideal& J);

// f ∈ √I, decided by testing whether I + (1 − y·f) is the unit ideal
// in a one-variable extension.
bool radical_member(const Polynomial& f, const Ideal& I);

// A variable name not used by the ring: base itself if free, else
// base0, base1, ...
std::string fresh_var_name(const PolyRing& ring, const std::string& base);

} // namespace gh

#endif
