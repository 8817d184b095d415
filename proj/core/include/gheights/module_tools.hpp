// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_MODULE_TOOLS_HPP
#define GHEIGHTS_MODULE_TOOLS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "gheights/dimension.hpp"
#include "gheights/free_module.hpp"
#include "gheights/ideal.hpp"
#include "gheights/matrix.hpp"

namespace gh {

// Presentation of the symmetric algebra of coker(A): the base ring
// extended by T1..Tn in front (block elimination order), modulo the
// linear forms (T1..Tn)·A.  Every defining generator is homogeneous of
// degree 1 in the T block.
struct SymPresentation {
    RingExtension extension;
    Ideal defining_ideal;
    std::size_t n = 0; // T-variable count = rows of the presentation
};

// Evidence that the symmetric algebra is equidimensional.  The
// complete-intersection kind is verified (height of the defining ideal
// equals its nonzero generator count, forcing Cohen-Macaulayness in a
// polynomial ring); the user-asserted kind records an unverified claim.
struct EquidimCertificate {
    enum class Kind { complete_intersection, user_asserted };
    Kind kind = Kind::user_asserted;
    std::string detail;
};

// The ideal of (rows − i)-size minors of A; unit ideal for i ≥ rows,
// zero ideal when rows − i exceeds both dimensions.
Ideal fitting_ideal(const PolyMatrix& A, std::size_t i);

// Ideal generated by the entries of the row vector b·A.
Ideal row_ideal(const PolyMatrix& A, const FreeModuleElement& b);

SymPresentation sym_presentation(const PolyMatrix& A);

// Presentation matrix of coker of the dualized map: the kernel of
// transpose(psi), one row per generator of coker(psi).
PolyMatrix dual_presentation(const PolyMatrix& psi);

struct OrderIdealResult {
    Ideal ideal;
    // Every entry of the representative has zero constant term; checks
    // that need the element inside m·N require this flag.
    bool x_in_max_ideal = false;
};

// The ideal of values of all functionals on coker(psi) at the element
// represented by x_vec: generated by the dot products of x_vec with
// the kernel columns of transpose(psi).  Independent of the chosen
// representative modulo the columns of psi.
OrderIdealResult order_ideal(const PolyMatrix& psi, const FreeModuleElement& x_vec);

// Verified certificate when the defining ideal is a complete
// intersection; nullopt when no decision is possible.
std::optional<EquidimCertificate> equidim_certificate(const SymPresentation& S);

} // namespace gh

#endif
