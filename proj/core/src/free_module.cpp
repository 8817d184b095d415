// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/free_module.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <set>
#include <utility>

#include "gheights/errors.hpp"
#include "gheights/limits.hpp"

namespace gh {

FreeModuleElement::FreeModuleElement(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    for (const auto& c : components_) require_same_ring(*ring_, *c.ring(), "FreeModuleElement");
}

FreeModuleElement FreeModuleElement::zero(const RingPtr& ring, std::size_t rank) {
    return FreeModuleElement(ring, std::vector<Polynomial>(rank, Polynomial(ring)));
}

FreeModuleElement FreeModuleElement::unit(const RingPtr& ring, std::size_t rank,
                                          std::size_t index) {
    assert(index < rank);
    std::vector<Polynomial> comps(rank, Polynomial(ring));
    comps[index] = Polynomial::from_int(ring, 1);
    return FreeModuleElement(ring, std::move(comps));
}

FreeModuleElement FreeModuleElement::add(const FreeModuleElement& other) const {
    if (rank() != other.rank()) throw DimensionMismatchError("free-module rank mismatch in add");
    std::vector<Polynomial> comps;
    comps.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) comps.push_back(components_[i].add(other.components_[i]));
    return FreeModuleElement(ring_, std::move(comps));
}

Polynomial FreeModuleElement::dot(const std::vector<Polynomial>& other) const {
    if (other.size() != rank()) throw DimensionMismatchError("dot product length mismatch");
    Polynomial acc(ring_);
    for (std::size_t i = 0; i < rank(); ++i) acc = acc.add(components_[i].mul(other[i]));
    return acc;
}

bool FreeModuleElement::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

bool FreeModuleElement::entries_in_max_ideal() const {
    for (const auto& c : components_)
        if (!c.in_max_ideal()) return false;
    return true;
}

bool FreeModuleElement::equals(const FreeModuleElement& other) const {
    if (rank() != other.rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (!components_[i].equals(other.components_[i])) return false;
    return true;
}

namespace {

// Dense vector in R^rank.  Module terms are ordered position-over-term
// with lower component index dominant: every term in component i beats
// every term in component j > i, ties broken by the ring order.
using Vec = std::vector<Polynomial>;

struct VecLead {
    std::size_t component;
    Term term;
};

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

VecLead vec_lead(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return VecLead{i, v[i].leading_term()};
    throw ZeroPolynomialError("leading term of the zero vector");
}

std::uint64_t vec_degree(const Vec& v) {
    std::uint64_t d = 0;
    for (const auto& p : v) d = std::max(d, p.total_degree());
    return d;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].sub(b[i]));
    return out;
}

Vec vec_term_mul(const Vec& v, const Coeff& c, const Monomial& m) {
    Vec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.term_mul(c, m));
    return out;
}

// Normal form against basis: the largest reducible module term is
// rewritten by the first eligible basis element, as in the ring case.
Vec vec_normal_form(const RingPtr& ring, Vec f, const std::vector<Vec>& basis) {
    const auto& F = ring->field();
    Vec rem(f.size(), Polynomial(ring));
    while (!vec_is_zero(f)) {
        VecLead lead = vec_lead(f);
        bool reduced = false;
        for (const auto& g : basis) {
            if (vec_is_zero(g)) continue;
            VecLead glead = vec_lead(g);
            if (glead.component != lead.component) continue;
            if (!glead.term.mono.divides(lead.term.mono)) continue;
            Coeff c = F.div(lead.term.coeff, glead.term.coeff);
            f = vec_sub(f, vec_term_mul(g, c, lead.term.mono.div(glead.term.mono)));
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::from_terms(ring, {lead.term});
            rem[lead.component] = rem[lead.component].add(t);
            f[lead.component] = f[lead.component].sub(t);
        }
    }
    return rem;
}

Vec vec_s_pair(const RingPtr& ring, const Vec& f, const Vec& g) {
    const auto& F = ring->field();
    VecLead lf = vec_lead(f);
    VecLead lg = vec_lead(g);
    assert(lf.component == lg.component);
    Monomial lcm = Monomial::lcm(lf.term.mono, lg.term.mono);
    Vec a = vec_term_mul(f, F.inv(lf.term.coeff), lcm.div(lf.term.mono));
    Vec b = vec_term_mul(g, F.inv(lg.term.coeff), lcm.div(lg.term.mono));
    return vec_sub(a, b);
}

// Module order comparison of leading terms, ascending.
bool vec_lead_less(const RingPtr& ring, const Vec& a, const Vec& b) {
    VecLead la = vec_lead(a);
    VecLead lb = vec_lead(b);
    if (la.component != lb.component) return la.component > lb.component;
    return ring->compare(la.term.mono, lb.term.mono) == std::strong_ordering::less;
}

std::vector<Vec> module_reduce_basis(const RingPtr& ring, std::vector<Vec> basis) {
    std::erase_if(basis, vec_is_zero);
    if (basis.empty()) return basis;
    const auto& F = ring->field();
    for (auto& v : basis) {
        Coeff inv = F.inv(vec_lead(v).term.coeff);
        for (auto& p : v) p = p.scalar_mul(inv);
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Vec& a, const Vec& b) { return vec_lead_less(ring, a, b); });
    std::vector<Vec> minimal;
    for (auto& v : basis) {
        VecLead lv = vec_lead(v);
        bool redundant = false;
        for (const auto& kept : minimal) {
            VecLead lk = vec_lead(kept);
            if (lk.component == lv.component && lk.term.mono.divides(lv.term.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(std::move(v));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Vec> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Vec reduced = vec_normal_form(ring, minimal[i], others);
            bool same = true;
            for (std::size_t k = 0; k < reduced.size() && same; ++k)
                same = reduced[k].equals(minimal[i][k]);
            if (!same) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
    }
    return minimal;
}

// Buchberger for submodules of R^rank.  Pairs require equal leading
// components.  The coprime criterion is not valid for modules, so only
// the chain criterion applies.
std::vector<Vec> module_groebner(const RingPtr& ring, std::vector<Vec> gens) {
    std::erase_if(gens, vec_is_zero);
    if (gens.empty()) return gens;
    const ResourceLimits limits = resource_limits();
    for (const auto& v : gens)
        if (vec_degree(v) > limits.max_degree)
            throw ResourceLimitError("generator degree exceeds the degree cap");

    std::vector<Vec> basis = std::move(gens);
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    std::uint64_t next_index = 0;
    auto push_pairs_for = [&](std::size_t j) {
        VecLead lj = vec_lead(basis[j]);
        for (std::size_t i = 0; i < j; ++i) {
            VecLead li = vec_lead(basis[i]);
            if (li.component != lj.component) continue;
            Monomial lcm = Monomial::lcm(li.term.mono, lj.term.mono);
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
            throw ResourceLimitError("pair cap exceeded in module basis computation");

        VecLead li = vec_lead(basis[i]);
        VecLead lj = vec_lead(basis[j]);
        Monomial lcm = Monomial::lcm(li.term.mono, lj.term.mono);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            VecLead lk = vec_lead(basis[k]);
            if (lk.component != li.component) continue;
            if (!lk.term.mono.divides(lcm)) continue;
            std::pair<std::size_t, std::size_t> ik{std::min(i, k), std::max(i, k)};
            std::pair<std::size_t, std::size_t> jk{std::min(j, k), std::max(j, k)};
            chained = done.count(ik) > 0 && done.count(jk) > 0;
        }
        if (chained) continue;

        Vec s = vec_normal_form(ring, vec_s_pair(ring, basis[i], basis[j]), basis);
        if (vec_is_zero(s)) continue;
        if (vec_degree(s) > limits.max_degree)
            throw ResourceLimitError("degree cap exceeded in module basis computation");
        basis.push_back(std::move(s));
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("basis size cap exceeded in module basis computation");
        push_pairs_for(basis.size() - 1);
    }
    return module_reduce_basis(ring, std::move(basis));
}

} // namespace

PolyMatrix kernel(const PolyMatrix& A) {
    const RingPtr& ring = A.ring();
    const std::size_t n = A.rows();
    const std::size_t m = A.cols();
    std::vector<Vec> gens;
    gens.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Vec v(n + m, Polynomial(ring));
        for (std::size_t i = 0; i < n; ++i) v[i] = A.at(i, j);
        v[n + j] = Polynomial::from_int(ring, 1);
        gens.push_back(std::move(v));
    }
    std::vector<Vec> basis = module_groebner(ring, std::move(gens));

    std::vector<Vec> syzygies;
    for (const auto& v : basis) {
        bool front_zero = true;
        for (std::size_t i = 0; i < n && front_zero; ++i) front_zero = v[i].is_zero();
        if (front_zero) syzygies.push_back(v);
    }
    PolyMatrix out(ring, m, syzygies.size());
    for (std::size_t c = 0; c < syzygies.size(); ++c)
        for (std::size_t r = 0; r < m; ++r) out.set(r, c, syzygies[c][n + r]);
    return out;
}

bool column_span_contains(const PolyMatrix& gens, const std::vector<Polynomial>& v) {
    const RingPtr& ring = gens.ring();
    if (v.size() != gens.rows())
        throw DimensionMismatchError("column span membership length mismatch");
    std::vector<Vec> cols;
    cols.reserve(gens.cols());
    for (std::size_t j = 0; j < gens.cols(); ++j) cols.push_back(gens.column(j));
    std::vector<Vec> basis = module_groebner(ring, std::move(cols));
    return vec_is_zero(vec_normal_form(ring, v, basis));
}

} // namespace gh
