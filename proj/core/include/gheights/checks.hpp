// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_CHECKS_HPP
#define GHEIGHTS_CHECKS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gheights/free_module.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/report.hpp"

namespace gh {

// Each check evaluates one height or dimension bound exactly and
// returns a BoundReport.  Inputs that defeat the statement outright
// (a unit entry where the maximal ideal is required, a witness that
// fails a verifiable containment) raise HypothesisViolatedError
// subclasses; hypotheses that cannot be decided are recorded with
// status unverified instead.  Vacuous instances (no component for the
// bound to constrain) report holds with the vacuous flag set.

// dim Sym(coker A) − rows(A) ≤ dim R/(b·A).  Entries of b must have
// zero constant term.
BoundReport check_lemma_1_1(const PolyMatrix& A, const FreeModuleElement& b);

// ht of the order ideal of x in coker(psi) ≤ rows(psi) − rank(psi).
// Entries of x_vec must have zero constant term.
BoundReport check_gpit(const PolyMatrix& psi, const FreeModuleElement& x_vec);

// With all t-minors of A zero and c constant-term-free:
// ht I_t([A|c]) ≤ rows(A) − t + 1.
BoundReport check_macaulay_ee(const PolyMatrix& A, const FreeModuleElement& c, std::size_t t);

// With all (t+1)-minors of A zero: ht I_t(A) ≤ rows + cols − 2t + 1.
BoundReport check_bruns(const PolyMatrix& A, std::size_t t);

// ht (b·A) ≤ rows(A) + ht Q − μ_Q(coker A), under an equidimensionality
// certificate for Sym(coker A) and a prime witness Q.
BoundReport check_row_ideal_equidim(const PolyMatrix& A, const FreeModuleElement& b,
                                    const std::optional<EquidimCertificate>& cert,
                                    const PrimeWitness& Q);

// ht of the part of Fitt_{i-1}(A) away from Fitt_i(A) is at most
// i·(i − rank(coker A)).  Vacuous when the saturation is the unit
// ideal (no component avoids Fitt_i).  i ≥ 1.
BoundReport check_kwiecinski(const PolyMatrix& A, std::size_t i,
                             const std::optional<EquidimCertificate>& cert);

// ht P ≤ i·(i − rank(coker A)) + μ_P(coker A) − i for a witness P
// containing Fitt_{i-1}(A) (containment verified).  Without a witness,
// falls back to the minimal-height component of Fitt_{i-1} with μ
// replaced by rows(A); that mode is always conservative.  Requires
// 1 ≤ i and rank(coker A) ≤ i.
BoundReport check_kwiecinski_refined(const PolyMatrix& A, std::size_t i,
                                     const std::optional<EquidimCertificate>& cert,
                                     const std::optional<PrimeWitness>& P);

// dim Sym(coker A) ≥ dim R/Q + μ_Q(coker A) for the supplied witnesses
// plus the defaults Q = (0) and Q = (all variables); lhs is the best
// witness value.  Equality at some witness is noted.
BoundReport check_huneke_rossi(const PolyMatrix& A, const std::vector<PrimeWitness>& witnesses);

// ht(I + J) ≤ ht I + ht J for proper ideals I, J.
BoundReport check_serre_subadditivity(const Ideal& I, const Ideal& J);

} // namespace gh

#endif
