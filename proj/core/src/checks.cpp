// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/checks.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gheights/errors.hpp"
#include "gheights/ideal_ops.hpp"

namespace gh {
namespace {

Exactness exactness_of(std::initializer_list<const Ideal*> ideals) {
    for (const Ideal* I : ideals)
        if (!I->is_homogeneous()) return Exactness::conservative;
    return Exactness::exact;
}

// Height with the bound-subject convention: the unit ideal has no
// component for a bound to constrain, so it contributes 0 (such
// reports are always vacuous).
long subject_height(const Ideal& I) { return I.is_unit() ? 0 : ideal_height(I); }

Hypothesis cert_hypothesis(const std::optional<EquidimCertificate>& cert) {
    if (!cert) return {"sym_equidimensional", HypStatus::unverified};
    if (cert->kind == EquidimCertificate::Kind::complete_intersection)
        return {"sym_equidimensional", HypStatus::verified};
    return {"sym_equidimensional", HypStatus::asserted};
}

std::string cert_note(const std::optional<EquidimCertificate>& cert) {
    if (!cert) return "equidimensionality certificate: none";
    std::string kind = cert->kind == EquidimCertificate::Kind::complete_intersection
                           ? "complete_intersection"
                           : "user_asserted";
    std::string note = "equidimensionality certificate: " + kind;
    if (!cert->detail.empty()) note += " (" + cert->detail + ")";
    return note;
}

long rank_of_cokernel(const PolyMatrix& A) {
    return static_cast<long>(A.rows()) - static_cast<long>(matrix_rank(A));
}

void require_all_minors_zero(const PolyMatrix& A, std::size_t t, const char* which) {
    for (const auto& minor : minors(A, t))
        if (!minor.is_zero())
            throw HypothesisViolatedError(std::string("a ") + which +
                                          " minor of the base matrix is nonzero");
}

} // namespace

BoundReport check_lemma_1_1(const PolyMatrix& A, const FreeModuleElement& b) {
    if (!b.entries_in_max_ideal())
        throw XNotInMNError("lemma_1_1: an entry of b has a nonzero constant term");
    Ideal RI = row_ideal(A, b);
    SymPresentation S = sym_presentation(A);
    long dim_sym = krull_dim(S.defining_ideal).dim;
    long dim_quotient = krull_dim(RI).dim;

    BoundReport r;
    r.theorem_id = "lemma_1_1";
    r.hypotheses.push_back({"b_entries_in_max_ideal", HypStatus::verified});
    r.lhs = dim_sym - static_cast<long>(A.rows());
    r.rhs = dim_quotient;
    r.vacuous = RI.is_unit();
    r.exactness = exactness_of({&RI, &S.defining_ideal});
    r.notes.push_back("dim Sym = " + std::to_string(dim_sym) + ", generators = " +
                      std::to_string(A.rows()));
    r.notes.push_back("dim of the row-ideal quotient = " + std::to_string(dim_quotient));
    if (r.vacuous) r.notes.push_back("vacuous: the row ideal is the unit ideal");
    return finalize_report(std::move(r));
}

BoundReport check_gpit(const PolyMatrix& psi, const FreeModuleElement& x_vec) {
    OrderIdealResult OI = order_ideal(psi, x_vec);
    if (!OI.x_in_max_ideal)
        throw XNotInMNError("gpit: an entry of the representative has a nonzero constant term");

    BoundReport r;
    r.theorem_id = "gpit";
    r.hypotheses.push_back({"x_in_mN", HypStatus::verified});
    r.hypotheses.push_back({"minimal_presentation", psi.entries_in_max_ideal()
                                                        ? HypStatus::verified
                                                        : HypStatus::unverified});
    r.vacuous = OI.ideal.is_zero() || OI.ideal.is_unit();
    r.lhs = subject_height(OI.ideal);
    r.rhs = static_cast<long>(psi.rows()) - static_cast<long>(matrix_rank(psi));
    r.exactness = exactness_of({&OI.ideal});
    r.notes.push_back("order ideal has " + std::to_string(OI.ideal.generators().size()) +
                      " generators");
    if (r.vacuous)
        r.notes.push_back(OI.ideal.is_zero() ? "vacuous: the order ideal is zero"
                                             : "vacuous: the order ideal is the unit ideal");
    return finalize_report(std::move(r));
}

BoundReport check_macaulay_ee(const PolyMatrix& A, const FreeModuleElement& c, std::size_t t) {
    if (c.rank() != A.rows())
        throw DimensionMismatchError("macaulay_ee: column length must equal the row count");
    if (!c.entries_in_max_ideal())
        throw XNotInMNError("macaulay_ee: an entry of the added column has a nonzero constant term");
    require_all_minors_zero(A, t, "t");

    PolyMatrix augmented = A.augment_column(c.components());
    Ideal It(A.ring(), minors(augmented, t));

    BoundReport r;
    r.theorem_id = "macaulay_ee";
    r.hypotheses.push_back({"vanishing_t_minors", HypStatus::verified});
    r.hypotheses.push_back({"c_entries_in_max_ideal", HypStatus::verified});
    r.vacuous = It.is_zero() || It.is_unit();
    r.lhs = subject_height(It);
    r.rhs = static_cast<long>(A.rows()) - static_cast<long>(t) + 1;
    r.exactness = exactness_of({&It});
    if (r.vacuous)
        r.notes.push_back(It.is_zero() ? "vacuous: the minor ideal is zero"
                                       : "vacuous: the minor ideal is the unit ideal");
    return finalize_report(std::move(r));
}

BoundReport check_bruns(const PolyMatrix& A, std::size_t t) {
    require_all_minors_zero(A, t + 1, "(t+1)");
    Ideal It(A.ring(), minors(A, t));

    BoundReport r;
    r.theorem_id = "bruns";
    r.hypotheses.push_back({"vanishing_t_plus_1_minors", HypStatus::verified});
    r.vacuous = It.is_zero() || It.is_unit();
    r.lhs = subject_height(It);
    r.rhs = static_cast<long>(A.rows()) + static_cast<long>(A.cols()) - 2 * static_cast<long>(t) + 1;
    r.exactness = exactness_of({&It});
    if (r.vacuous)
        r.notes.push_back(It.is_zero() ? "vacuous: the minor ideal is zero"
                                       : "vacuous: the minor ideal is the unit ideal");
    return finalize_report(std::move(r));
}

BoundReport check_row_ideal_equidim(const PolyMatrix& A, const FreeModuleElement& b,
                                    const std::optional<EquidimCertificate>& cert,
                                    const PrimeWitness& Q) {
    require_same_ring(*A.ring(), *Q.ideal().ring(), "row_ideal_equidim");
    Ideal RI = row_ideal(A, b);

    // The bound applies to primes below the row ideal's components;
    // Q sits below every component exactly when Q ⊆ √(RI).
    bool q_below = true;
    for (const auto& g : Q.ideal().generators())
        if (!radical_member(g, RI)) {
            q_below = false;
            break;
        }

    long ht_q = ideal_height(Q.ideal());
    std::size_t mu = mu_at_prime(A, Q.ideal());

    BoundReport r;
    r.theorem_id = "row_ideal_equidim";
    r.hypotheses.push_back(cert_hypothesis(cert));
    r.hypotheses.push_back({"Q_prime", Q.primality_status()});
    r.hypotheses.push_back(
        {"Q_below_every_component", q_below ? HypStatus::verified : HypStatus::unverified});
    r.vacuous = RI.is_unit();
    r.lhs = subject_height(RI);
    r.rhs = static_cast<long>(A.rows()) + ht_q - static_cast<long>(mu);
    r.exactness = exactness_of({&RI, &Q.ideal()});
    r.notes.push_back(cert_note(cert));
    r.notes.push_back("witness " + Q.label() + ": ht = " + std::to_string(ht_q) +
                      ", mu = " + std::to_string(mu));
    if (r.vacuous) r.notes.push_back("vacuous: the row ideal is the unit ideal");
    return finalize_report(std::move(r));
}

BoundReport check_kwiecinski(const PolyMatrix& A, std::size_t i,
                             const std::optional<EquidimCertificate>& cert) {
    if (i < 1) throw InvalidInputError("kwiecinski: the index i must be at least 1");
    Ideal fitt_lo = fitting_ideal(A, i - 1);
    Ideal fitt_hi = fitting_ideal(A, i);
    long rank_m = rank_of_cokernel(A);

    BoundReport r;
    r.theorem_id = "kwiecinski";
    r.hypotheses.push_back(cert_hypothesis(cert));
    r.rhs = static_cast<long>(i) * (static_cast<long>(i) - rank_m);
    r.exactness = Exactness::conservative; // lhs is the minimum over qualifying components
    r.notes.push_back(cert_note(cert));
    if (fitt_hi.is_zero()) {
        r.vacuous = true;
        r.lhs = 0;
        r.notes.push_back("vacuous: the higher Fitting ideal is zero, every component contains it");
    } else {
        Ideal away = saturate(fitt_lo, fitt_hi);
        r.vacuous = away.is_unit();
        r.lhs = subject_height(away);
        if (r.vacuous)
            r.notes.push_back("vacuous: no component avoids the higher Fitting ideal");
        else
            r.notes.push_back("saturation has " + std::to_string(away.generators().size()) +
                              " generators");
    }
    r.notes.push_back("rank of the cokernel = " + std::to_string(rank_m));
    return finalize_report(std::move(r));
}

BoundReport check_kwiecinski_refined(const PolyMatrix& A, std::size_t i,
                                     const std::optional<EquidimCertificate>& cert,
                                     const std::optional<PrimeWitness>& P) {
    if (i < 1) throw InvalidInputError("kwiecinski_refined: the index i must be at least 1");
    long rank_m = rank_of_cokernel(A);
    if (static_cast<long>(i) < rank_m)
        throw InvalidInputError("kwiecinski_refined: i must be at least the cokernel rank");
    Ideal fitt_lo = fitting_ideal(A, i - 1);

    BoundReport r;
    r.theorem_id = "kwiecinski_refined";
    r.hypotheses.push_back(cert_hypothesis(cert));
    r.notes.push_back(cert_note(cert));
    r.notes.push_back("rank of the cokernel = " + std::to_string(rank_m));

    if (P) {
        require_same_ring(*A.ring(), *P->ideal().ring(), "kwiecinski_refined");
        for (const auto& g : fitt_lo.generators())
            if (!P->ideal().contains(g))
                throw WitnessNotContainingError(
                    "kwiecinski_refined: the witness does not contain the Fitting ideal");
        std::size_t mu = mu_at_prime(A, P->ideal());
        r.hypotheses.push_back({"P_contains_fitting", HypStatus::verified});
        r.hypotheses.push_back({"P_minimal_prime_over_fitting",
                                P->asserted() ? HypStatus::asserted : HypStatus::unverified});
        r.lhs = ideal_height(P->ideal());
        r.rhs = static_cast<long>(i) * (static_cast<long>(i) - rank_m) + static_cast<long>(mu) -
                static_cast<long>(i);
        r.exactness = exactness_of({&P->ideal()});
        r.notes.push_back("witness " + P->label() + ": mu = " + std::to_string(mu));
    } else {
        r.hypotheses.push_back({"P_minimal_prime_over_fitting", HypStatus::unverified});
        r.vacuous = fitt_lo.is_unit();
        r.lhs = subject_height(fitt_lo);
        r.rhs = static_cast<long>(i) * (static_cast<long>(i) - rank_m) +
                static_cast<long>(A.rows()) - static_cast<long>(i);
        r.exactness = Exactness::conservative;
        r.notes.push_back(
            "witness-free mode: minimal-height component, mu replaced by the generator count");
        if (r.vacuous) r.notes.push_back("vacuous: the lower Fitting ideal is the unit ideal");
    }
    return finalize_report(std::move(r));
}

BoundReport check_huneke_rossi(const PolyMatrix& A, const std::vector<PrimeWitness>& witnesses) {
    const RingPtr& ring = A.ring();
    SymPresentation S = sym_presentation(A);
    long dim_sym = krull_dim(S.defining_ideal).dim;

    std::vector<PrimeWitness> all;
    all.push_back(PrimeWitness::zero_ideal(ring));
    all.push_back(PrimeWitness::irrelevant_maximal(ring));
    all.insert(all.end(), witnesses.begin(), witnesses.end());

    BoundReport r;
    r.theorem_id = "huneke_rossi";
    r.rhs = dim_sym;
    bool exact = S.defining_ideal.is_homogeneous();
    long best = 0;
    std::string best_label;
    bool first = true;
    for (const auto& w : all) {
        require_same_ring(*ring, *w.ideal().ring(), "huneke_rossi");
        long value = krull_dim(w.ideal()).dim + static_cast<long>(mu_at_prime(A, w.ideal()));
        if (first || value > best) {
            best = value;
            best_label = w.label();
            first = false;
        }
        r.hypotheses.push_back({"prime(" + w.label() + ")", w.primality_status()});
        r.notes.push_back("witness " + w.label() + ": dim R/Q + mu = " + std::to_string(value));
        if (!w.ideal().is_homogeneous()) exact = false;
    }
    r.lhs = best;
    r.exactness = exact ? Exactness::exact : Exactness::conservative;
    r.notes.push_back("dim Sym = " + std::to_string(dim_sym));
    if (best == dim_sym) r.notes.push_back("equality attained at witness " + best_label);
    return finalize_report(std::move(r));
}

BoundReport check_serre_subadditivity(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring(), "serre_subadditivity");
    if (I.is_unit() || J.is_unit())
        throw NonProperIdealError("serre_subadditivity: both ideals must be proper");
    Ideal sum = ideal_sum(I, J);

    BoundReport r;
    r.theorem_id = "serre_subadditivity";
    r.vacuous = sum.is_unit();
    r.lhs = subject_height(sum);
    r.rhs = ideal_height(I) + ideal_height(J);
    r.exactness = exactness_of({&I, &J, &sum});
    if (r.vacuous) r.notes.push_back("vacuous: the sum is the unit ideal");
    return finalize_report(std::move(r));
}

} // namespace gh
