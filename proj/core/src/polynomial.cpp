// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "gheights/errors.hpp"

namespace gh {

Polynomial Polynomial::constant(const RingPtr& ring, Coeff c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c))
        p.terms_.push_back(Term{Monomial::unit(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::from_int(const RingPtr& ring, long v) {
    return constant(ring, ring->field().from_integer(v));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
    assert(index < ring->nvars());
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[index] = 1;
    Polynomial p(ring);
    p.terms_.push_back(Term{Monomial(std::move(e)), ring->field().one()});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    const auto& F = ring->field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
            if (F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Coeff Polynomial::constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_unit()) return terms_.back().coeff;
    return ring_->field().zero();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_unit() &&
           ring_->field().is_one(terms_[0].coeff);
}

bool Polynomial::in_max_ideal() const {
    return terms_.empty() || !terms_.back().mono.is_unit();
}

Polynomial Polynomial::add(const Polynomial& other) const {
    require_same_ring(*ring_, *other.ring_, "add");
    const auto& F = ring_->field();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        auto cmp = ring_->compare(terms_[i].mono, other.terms_[j].mono);
        if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Coeff c = F.add(terms_[i].coeff, other.terms_[j].coeff);
            if (!F.is_zero(c)) out.terms_.push_back(Term{terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::neg() const {
    const auto& F = ring_->field();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, F.neg(t.coeff)});
    return out;
}

Polynomial Polynomial::sub(const Polynomial& other) const { return add(other.neg()); }

Polynomial Polynomial::mul(const Polynomial& other) const {
    require_same_ring(*ring_, *other.ring_, "mul");
    const auto& F = ring_->field();
    auto desc = [this](const Monomial& a, const Monomial& b) {
        return ring_->compare(a, b) == std::strong_ordering::greater;
    };
    std::map<Monomial, Coeff, decltype(desc)> acc(desc);
    for (const auto& s : terms_) {
        for (const auto& t : other.terms_) {
            Monomial m = s.mono.mul(t.mono);
            Coeff c = F.mul(s.coeff, t.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second = F.add(it->second, c);
                if (F.is_zero(it->second)) acc.erase(it);
            }
        }
    }
    Polynomial out(ring_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) out.terms_.push_back(Term{m, c});
    return out;
}

Polynomial Polynomial::scalar_mul(const Coeff& c) const {
    const auto& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, F.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::term_mul(const Coeff& c, const Monomial& m) const {
    const auto& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.mono.mul(m), F.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = from_int(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const auto& F = ring_->field();
    if (F.is_one(terms_.front().coeff)) return *this;
    return scalar_mul(F.inv(terms_.front().coeff));
}

bool Polynomial::equals(const Polynomial& other) const {
    if (!ring_->same(*other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    const auto& F = ring_->field();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != other.terms_[i].mono) return false;
        if (!F.eq(terms_[i].coeff, other.terms_[i].coeff)) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const auto& F = ring_->field();
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        bool negative = F.is_negative(t.coeff);
        if (i == 0) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono_part;
        bool first_factor = true;
        for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
            std::uint32_t e = t.mono.exponent(v);
            if (e == 0) continue;
            if (!first_factor) mono_part += "*";
            mono_part += ring_->variable(v);
            if (e != 1) mono_part += "^" + std::to_string(e);
            first_factor = false;
        }
        std::string coeff_part = F.abs_string(t.coeff);
        if (mono_part.empty()) {
            os << coeff_part;
        } else if (coeff_part == "1") {
            os << mono_part;
        } else {
            os << coeff_part << "*" << mono_part;
        }
    }
    return os.str();
}

namespace {

Monomial shift_monomial(const Monomial& m, std::size_t offset, std::size_t new_nvars) {
    std::vector<std::uint32_t> e(new_nvars, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[offset + i] = m.exponent(i);
    return Monomial(std::move(e));
}

} // namespace

Polynomial RingExtension::embed(const Polynomial& p) const {
    require_same_ring(*p.ring(), *base, "embed");
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms())
        terms.push_back(Term{shift_monomial(t.mono, base_offset, extended->nvars()), t.coeff});
    return Polynomial::from_terms(extended, std::move(terms));
}

Polynomial RingExtension::restrict_to_base(const Polynomial& p) const {
    require_same_ring(*p.ring(), *extended, "restrict_to_base");
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    const std::size_t n = base->nvars();
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(n, 0);
        for (std::size_t i = 0; i < extended->nvars(); ++i) {
            std::uint32_t exp = t.mono.exponent(i);
            if (exp == 0) continue;
            if (i < base_offset || i >= base_offset + n)
                throw InvalidInputError("restrict_to_base: polynomial involves an added variable");
            e[i - base_offset] = exp;
        }
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

Polynomial RingExtension::added_variable(std::size_t i) const {
    assert(i < added);
    std::size_t idx = base_offset == 0 ? base->nvars() + i : i;
    return Polynomial::variable(extended, idx);
}

RingExtension extend_ring(const RingPtr& ring, const std::vector<std::string>& new_vars,
                          Placement placement) {
    MonomialOrder order = placement == Placement::front
                              ? MonomialOrder::block(new_vars.size())
                              : ring->order();
    return extend_ring(ring, new_vars, placement, order);
}

RingExtension extend_ring(const RingPtr& ring, const std::vector<std::string>& new_vars,
                          Placement placement, MonomialOrder order) {
    if (new_vars.empty()) {
        RingExtension ext;
        ext.extended = ring;
        ext.base = ring;
        ext.base_offset = 0;
        ext.added = 0;
        return ext;
    }
    for (const auto& v : new_vars)
        if (ring->var_index(v))
            throw DuplicateVariableError("variable '" + v + "' already exists in the ring");
    std::vector<std::string> vars;
    vars.reserve(ring->nvars() + new_vars.size());
    std::size_t offset = 0;
    if (placement == Placement::front) {
        vars.insert(vars.end(), new_vars.begin(), new_vars.end());
        vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
        offset = new_vars.size();
    } else {
        vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
        vars.insert(vars.end(), new_vars.begin(), new_vars.end());
    }
    RingExtension ext;
    ext.extended = PolyRing::create(std::move(vars), ring->field(), order);
    ext.base = ring;
    ext.base_offset = offset;
    ext.added = new_vars.size();
    return ext;
}

} // namespace gh
