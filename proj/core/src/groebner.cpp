// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/groebner.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "gheights/errors.hpp"
#include "gheights/limits.hpp"

namespace gh {
namespace {

// Returns the index of the first element of gens whose leading monomial
// divides m, or npos.
std::size_t first_divisor(const Monomial& m, const std::vector<Polynomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        if (gens[i].leading_monomial().divides(m)) return i;
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens) {
    const RingPtr& ring = f.ring();
    for (const auto& g : gens)
        if (!g.is_zero()) require_same_ring(*ring, *g.ring(), "normal_form");
    const auto& F = ring->field();
    Polynomial rem(ring);
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        std::size_t i = first_divisor(lt.mono, gens);
        if (i == static_cast<std::size_t>(-1)) {
            // The leading term is irreducible; it can never become
            // reducible again, so move it to the remainder.
            rem = rem.add(Polynomial::from_terms(ring, {lt}));
            work = work.sub(Polynomial::from_terms(ring, {lt}));
        } else {
            const Term& glt = gens[i].leading_term();
            Coeff c = F.div(lt.coeff, glt.coeff);
            work = work.sub(gens[i].term_mul(c, lt.mono.div(glt.mono)));
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_same_ring(*f.ring(), *g.ring(), "s_polynomial");
    const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const auto& F = f.ring()->field();
    Polynomial a = f.term_mul(F.inv(f.leading_term().coeff), lcm.div(f.leading_monomial()));
    Polynomial b = g.term_mul(F.inv(g.leading_term().coeff), lcm.div(g.leading_monomial()));
    return a.sub(b);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    if (basis.empty()) return basis;
    const RingPtr& ring = basis.front().ring();
    for (auto& g : basis) g = g.monic();

    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) ==
               std::strong_ordering::less;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(std::move(g));
    }

    // Leading monomials are now pairwise indivisible, so tail reduction
    // preserves every leading term and reaches a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial reduced = normal_form(minimal[i], others);
            if (!reduced.equals(minimal[i])) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
    }
    return minimal;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;
    const RingPtr& ring = basis.front().ring();
    for (const auto& g : basis) require_same_ring(*ring, *g.ring(), "groebner_basis");

    const ResourceLimits limits = resource_limits();
    for (const auto& g : basis)
        if (g.total_degree() > limits.max_degree)
            throw ResourceLimitError("generator degree exceeds the degree cap");

    // Pair queue keyed by (lcm total degree, insertion index); the index
    // is unique, so iteration order is total and deterministic.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    std::uint64_t next_index = 0;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial lcm = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.emplace(std::make_pair(lcm.total_degree(), next_index++), std::make_pair(i, j));
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        auto [i, j] = queue.begin()->second;
        queue.erase(queue.begin());
        done.emplace(i, j);
        if (++processed > limits.max_pairs)
            throw ResourceLimitError("pair cap exceeded in basis computation");

        const Monomial& lmi = basis[i].leading_monomial();
        const Monomial& lmj = basis[j].leading_monomial();
        if (lmi.coprime(lmj)) continue;

        // Chain criterion: skip when some other leading monomial divides
        // the pair lcm and both side pairs were already treated.
        Monomial lcm = Monomial::lcm(lmi, lmj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(lcm)) continue;
            std::pair<std::size_t, std::size_t> ik{std::min(i, k), std::max(i, k)};
            std::pair<std::size_t, std::size_t> jk{std::min(j, k), std::max(j, k)};
            chained = done.count(ik) > 0 && done.count(jk) > 0;
        }
        if (chained) continue;

        Polynomial s = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        if (s.total_degree() > limits.max_degree)
            throw ResourceLimitError("degree cap exceeded in basis computation");
        basis.push_back(s.monic());
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("basis size cap exceeded in basis computation");
        push_pairs_for(basis.size() - 1);
    }
    return reduce_basis(std::move(basis));
}

} // namespace gh
