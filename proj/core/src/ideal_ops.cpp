// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/ideal_ops.hpp"

#include <algorithm>

#include "gheights/errors.hpp"

namespace gh {
namespace {

// Generators of I ∩ base ring, for an ideal given in a one-variable
// front extension: the t-free elements of the reduced basis.
std::vector<Polynomial> eliminate_front_var(const RingExtension& ext,
                                            std::vector<Polynomial> gens) {
    Ideal extended(ext.extended, std::move(gens));
    std::vector<Polynomial> result;
    for (const auto& g : extended.basis()) {
        bool t_free = true;
        for (const auto& term : g.terms()) {
            if (term.mono.degree_window(0, ext.added) != 0) {
                t_free = false;
                break;
            }
        }
        if (t_free) result.push_back(ext.restrict_to_base(g));
    }
    return result;
}

} // namespace

std::string fresh_var_name(const PolyRing& ring, const std::string& base) {
    if (!ring.var_index(base)) return base;
    for (unsigned long i = 0;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!ring.var_index(candidate)) return candidate;
    }
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_vars) {
    const RingPtr& ring = I.ring();
    for (const auto& v : front_vars)
        if (!ring->var_index(v))
            throw UnknownVariableError("eliminate: unknown variable '" + v + "'");
    if (front_vars.empty()) return I;

    std::vector<std::size_t> front, back;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        bool eliminated =
            std::find(front_vars.begin(), front_vars.end(), ring->variable(i)) != front_vars.end();
        (eliminated ? front : back).push_back(i);
    }

    // Permuted copy of the ring with the eliminated variables in front.
    std::vector<std::size_t> perm = front;
    perm.insert(perm.end(), back.begin(), back.end());
    std::vector<std::string> perm_names;
    for (std::size_t idx : perm) perm_names.push_back(ring->variable(idx));
    RingPtr work = PolyRing::create(perm_names, ring->field(), MonomialOrder::block(front.size()));

    std::vector<Polynomial> work_gens;
    for (const auto& g : I.generators()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> e(ring->nvars(), 0);
            for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.mono.exponent(perm[i]);
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        work_gens.push_back(Polynomial::from_terms(work, std::move(terms)));
    }

    MonomialOrder sub_order =
        ring->order().kind == MonomialOrder::Kind::lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
    std::vector<std::string> sub_names;
    for (std::size_t idx : back) sub_names.push_back(ring->variable(idx));
    RingPtr sub = PolyRing::create(sub_names, ring->field(), sub_order);

    Ideal work_ideal(work, std::move(work_gens));
    std::vector<Polynomial> result;
    for (const auto& g : work_ideal.basis()) {
        bool front_free = true;
        for (const auto& t : g.terms()) {
            if (t.mono.degree_window(0, front.size()) != 0) {
                front_free = false;
                break;
            }
        }
        if (!front_free) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> e(back.size(), 0);
            for (std::size_t i = 0; i < back.size(); ++i) e[i] = t.mono.exponent(front.size() + i);
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        result.push_back(Polynomial::from_terms(sub, std::move(terms)));
    }
    return Ideal(sub, std::move(result));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring(), "intersect");
    const RingPtr& ring = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal(ring, {});
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;

    RingExtension ext = extend_ring(ring, {fresh_var_name(*ring, "t")}, Placement::front);
    Polynomial t = ext.added_variable(0);
    Polynomial one_minus_t = Polynomial::from_int(ext.extended, 1).sub(t);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t.mul(ext.embed(g)));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t.mul(ext.embed(g)));
    return Ideal(ring, eliminate_front_var(ext, std::move(gens)));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring(), "saturate");
    if (J.is_zero()) throw InvalidInputError("saturate: the saturating ideal must be nonzero");
    const RingPtr& ring = I.ring();

    bool first = true;
    Ideal acc(ring, {});
    for (const auto& g : J.generators()) {
        RingExtension ext = extend_ring(ring, {fresh_var_name(*ring, "t")}, Placement::front);
        Polynomial t = ext.added_variable(0);
        std::vector<Polynomial> gens;
        for (const auto& f : I.generators()) gens.push_back(ext.embed(f));
        gens.push_back(Polynomial::from_int(ext.extended, 1).sub(t.mul(ext.embed(g))));
        Ideal single(ring, eliminate_front_var(ext, std::move(gens)));
        acc = first ? single : intersect(acc, single);
        first = false;
    }
    return acc;
}

bool radical_member(const Polynomial& f, const Ideal& I) {
    require_same_ring(*f.ring(), *I.ring(), "radical_member");
    const RingPtr& ring = I.ring();
    RingExtension ext = extend_ring(ring, {fresh_var_name(*ring, "y")}, Placement::front);
    Polynomial y = ext.added_variable(0);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(ext.embed(g));
    gens.push_back(Polynomial::from_int(ext.extended, 1).sub(y.mul(ext.embed(f))));
    return Ideal(ext.extended, std::move(gens)).is_unit();
}

} // namespace gh
