// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/module_tools.hpp"

#include <algorithm>
#include <utility>

#include "gheights/errors.hpp"

namespace gh {

Ideal fitting_ideal(const PolyMatrix& A, std::size_t i) {
    const std::size_t n = A.rows();
    if (i >= n) return Ideal(A.ring(), {Polynomial::from_int(A.ring(), 1)});
    std::size_t t = n - i;
    if (t > std::min(A.rows(), A.cols())) return Ideal(A.ring(), {});
    return Ideal(A.ring(), minors(A, t));
}

Ideal row_ideal(const PolyMatrix& A, const FreeModuleElement& b) {
    require_same_ring(*A.ring(), *b.ring(), "row_ideal");
    if (b.rank() != A.rows())
        throw DimensionMismatchError("row vector length must equal the matrix row count");
    std::vector<Polynomial> gens;
    gens.reserve(A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) gens.push_back(b.dot(A.column(j)));
    return Ideal(A.ring(), std::move(gens));
}

SymPresentation sym_presentation(const PolyMatrix& A) {
    const RingPtr& ring = A.ring();
    const std::size_t n = A.rows();

    // T1..Tn, uniformly underscore-suffixed until free of collisions.
    std::vector<std::string> names;
    std::string suffix;
    while (true) {
        names.clear();
        bool clash = false;
        for (std::size_t i = 0; i < n && !clash; ++i) {
            names.push_back("T" + std::to_string(i + 1) + suffix);
            clash = ring->var_index(names.back()).has_value();
        }
        if (!clash) break;
        suffix += "_";
    }

    RingExtension ext = extend_ring(ring, names, Placement::front);
    std::vector<Polynomial> gens;
    gens.reserve(A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Polynomial gen(ext.extended);
        for (std::size_t i = 0; i < n; ++i)
            gen = gen.add(ext.added_variable(i).mul(ext.embed(A.at(i, j))));
        gens.push_back(std::move(gen));
    }
    SymPresentation S{ext, Ideal(ext.extended, std::move(gens)), n};
    return S;
}

PolyMatrix dual_presentation(const PolyMatrix& psi) { return kernel(psi.transpose()); }

OrderIdealResult order_ideal(const PolyMatrix& psi, const FreeModuleElement& x_vec) {
    require_same_ring(*psi.ring(), *x_vec.ring(), "order_ideal");
    if (x_vec.rank() != psi.rows())
        throw DimensionMismatchError("element representative length must equal the generator count");
    PolyMatrix H = kernel(psi.transpose());
    std::vector<Polynomial> gens;
    gens.reserve(H.cols());
    for (std::size_t j = 0; j < H.cols(); ++j) gens.push_back(x_vec.dot(H.column(j)));
    return OrderIdealResult{Ideal(psi.ring(), std::move(gens)), x_vec.entries_in_max_ideal()};
}

std::optional<EquidimCertificate> equidim_certificate(const SymPresentation& S) {
    const std::size_t gens = S.defining_ideal.generators().size();
    long h = ideal_height(S.defining_ideal);
    if (h == static_cast<long>(gens)) {
        return EquidimCertificate{EquidimCertificate::Kind::complete_intersection,
                                  "defining ideal height " + std::to_string(h) + " equals its " +
                                      std::to_string(gens) + " generators"};
    }
    return std::nullopt;
}

} // namespace gh
