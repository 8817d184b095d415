// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gh {

/// One coefficient. Exactly one alternative is active, fixed by the owning
/// field: mpq_class (lowest terms, positive denominator) for the rationals,
/// int64_t (least non-negative residue) for a prime field.
using Coeff = std::variant<mpq_class, std::int64_t>;

/// Deterministic Miller-Rabin, valid for every n < 2^31.
bool is_prime_int64(std::int64_t n);

/// The coefficient field of a polynomial ring: the rationals or Z/p for a
/// prime p < 2^31. All arithmetic is exact.
class CoefficientField {
public:
    enum class Kind { rationals, prime_field };

    static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }
    /// Throws InvalidInputError unless 2 <= p < 2^31 and p is prime.
    static CoefficientField prime_field(std::int64_t p);

    Kind kind() const { return kind_; }
    /// 0 for the rationals, p for Z/p.
    std::int64_t characteristic() const { return p_; }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_integer(long v) const;
    /// Builds the field element num/den from decimal digit strings.
    /// Throws FieldMismatchError if den reduces to 0 in a prime field.
    Coeff from_fraction(bool negative, const std::string& num_digits,
                        const std::string& den_digits) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    /// Multiplicative inverse; a must be nonzero.
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const;

    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;
    bool eq(const Coeff& a, const Coeff& b) const;
    /// True for negative rationals; always false in a prime field
    /// (residues are canonical, 0 <= r < p).
    bool is_negative(const Coeff& a) const;

    std::string to_string(const Coeff& a) const;
    /// |a| rendered as a string (used when printing "- c*mono").
    std::string abs_string(const Coeff& a) const;

    bool operator==(const CoefficientField& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

private:
    CoefficientField(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

} // namespace gh
