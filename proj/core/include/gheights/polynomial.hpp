// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gheights/ring.hpp"

namespace gh {

struct Term {
    Monomial mono;
    Coeff coeff;
};

/// An exact multivariate polynomial in canonical form: terms strictly
/// decreasing in the ring's monomial order, no zero coefficients, the zero
/// polynomial has an empty term list. Two polynomials over the same ring are
/// equal iff their term lists are identical. Immutable after construction.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, Coeff c);
    static Polynomial from_int(const RingPtr& ring, long v);
    static Polynomial variable(const RingPtr& ring, std::size_t index);
    /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Maximal term under the ring order. Throws ZeroPolynomialError on 0.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }

    std::uint64_t total_degree() const; // 0 for the zero polynomial
    bool is_homogeneous() const;        // vacuously true for 0
    /// Coefficient of the monomial 1.
    Coeff constant_coeff() const;
    bool is_constant() const;
    bool is_one() const;
    /// True iff every term has positive total degree, i.e. the polynomial
    /// lies in the irrelevant maximal ideal m = (all variables).
    bool in_max_ideal() const;

    Polynomial add(const Polynomial& other) const;
    Polynomial sub(const Polynomial& other) const;
    Polynomial neg() const;
    Polynomial mul(const Polynomial& other) const;
    Polynomial scalar_mul(const Coeff& c) const;
    /// this * c*x^m in one pass.
    Polynomial term_mul(const Coeff& c, const Monomial& m) const;
    Polynomial pow(std::uint32_t e) const;
    /// Leading coefficient scaled to 1.
    Polynomial monic() const;

    bool equals(const Polynomial& other) const;

    /// Canonical rendering: terms in decreasing order, explicit "*" and "^",
    /// coefficient 1 suppressed except for the constant term. Reparses to the
    /// identical canonical form.
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add(b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.sub(b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.mul(b); }
inline Polynomial operator-(const Polynomial& a) { return a.neg(); }
inline bool operator==(const Polynomial& a, const Polynomial& b) { return a.equals(b); }

enum class Placement { front, back };

/// A ring extension R -> R[new vars] together with the index shift needed to
/// move polynomials across it. The embedding preserves arithmetic and the
/// printed form of existing polynomials.
struct RingExtension {
    RingPtr extended;
    RingPtr base;
    /// Position at which the base ring's variable block starts in `extended`.
    std::size_t base_offset = 0;
    std::size_t added = 0;

    Polynomial embed(const Polynomial& p) const;
    /// Inverse of embed for polynomials free of the added variables.
    Polynomial restrict_to_base(const Polynomial& p) const;
    Polynomial added_variable(std::size_t i) const;
};

/// Adjoins new variables at the front or back. Front placement defaults the
/// order to a block elimination order for the new variables; pass an explicit
/// order to override. Extending by zero variables returns the ring unchanged.
RingExtension extend_ring(const RingPtr& ring, const std::vector<std::string>& new_vars,
                          Placement placement);
RingExtension extend_ring(const RingPtr& ring, const std::vector<std::string>& new_vars,
                          Placement placement, MonomialOrder order);

} // namespace gh
