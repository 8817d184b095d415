// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/coeff.hpp"

#include <cassert>

#include "gheights/errors.hpp"

namespace gh {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid; v must be a unit mod p.
std::int64_t invmod(std::int64_t v, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = v % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    assert(r == 1 && "inverse of a non-unit");
    return t < 0 ? t + p : t;
}

const mpq_class& q_of(const Coeff& c) { return std::get<mpq_class>(c); }
std::int64_t r_of(const Coeff& c) { return std::get<std::int64_t>(c); }

} // namespace

bool is_prime_int64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7}) {
        if (n % q == 0) return n == q;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases 2, 3, 5, 7 decide primality below 3.2e9, which covers 2^31.
    for (std::int64_t a : {2, 3, 5, 7}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

CoefficientField CoefficientField::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw InvalidInputError("prime field characteristic must satisfy 2 <= p < 2^31");
    if (!is_prime_int64(p))
        throw InvalidInputError("characteristic " + std::to_string(p) + " is not prime");
    return CoefficientField(Kind::prime_field, p);
}

Coeff CoefficientField::zero() const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(0));
    return Coeff(std::int64_t(0));
}

Coeff CoefficientField::one() const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(1));
    return Coeff(std::int64_t(1 % p_));
}

Coeff CoefficientField::from_integer(long v) const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(v));
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return Coeff(r);
}

Coeff CoefficientField::from_fraction(bool negative, const std::string& num_digits,
                                      const std::string& den_digits) const {
    mpz_class num(num_digits, 10);
    mpz_class den(den_digits, 10);
    if (negative) num = -num;
    if (den == 0) throw FieldMismatchError("zero denominator in coefficient literal");
    if (kind_ == Kind::rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return Coeff(q);
    }
    mpz_class p(static_cast<long>(p_));
    mpz_class dr = den % p;
    if (dr == 0)
        throw FieldMismatchError("denominator " + den_digits + " vanishes modulo " +
                                 std::to_string(p_));
    mpz_class nr = num % p;
    std::int64_t n_res = nr.get_si();
    if (n_res < 0) n_res += p_;
    std::int64_t d_res = dr.get_si();
    return Coeff(mulmod(n_res, invmod(d_res, p_), p_));
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(q_of(a) + q_of(b)));
    std::int64_t s = r_of(a) + r_of(b);
    if (s >= p_) s -= p_;
    return Coeff(s);
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(q_of(a) - q_of(b)));
    std::int64_t s = r_of(a) - r_of(b);
    if (s < 0) s += p_;
    return Coeff(s);
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(q_of(a) * q_of(b)));
    return Coeff(mulmod(r_of(a), r_of(b), p_));
}

Coeff CoefficientField::neg(const Coeff& a) const {
    if (kind_ == Kind::rationals) return Coeff(mpq_class(-q_of(a)));
    std::int64_t r = r_of(a);
    return Coeff(r == 0 ? 0 : p_ - r);
}

Coeff CoefficientField::inv(const Coeff& a) const {
    assert(!is_zero(a) && "inverse of zero");
    if (kind_ == Kind::rationals) return Coeff(mpq_class(1 / q_of(a)));
    return Coeff(invmod(r_of(a), p_));
}

Coeff CoefficientField::div(const Coeff& a, const Coeff& b) const {
    return mul(a, inv(b));
}

bool CoefficientField::is_zero(const Coeff& a) const {
    if (kind_ == Kind::rationals) return q_of(a) == 0;
    return r_of(a) == 0;
}

bool CoefficientField::is_one(const Coeff& a) const {
    if (kind_ == Kind::rationals) return q_of(a) == 1;
    return r_of(a) == 1 % p_;
}

bool CoefficientField::eq(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::rationals) return q_of(a) == q_of(b);
    return r_of(a) == r_of(b);
}

bool CoefficientField::is_negative(const Coeff& a) const {
    if (kind_ == Kind::rationals) return q_of(a) < 0;
    return false;
}

std::string CoefficientField::to_string(const Coeff& a) const {
    if (kind_ == Kind::rationals) return q_of(a).get_str();
    return std::to_string(r_of(a));
}

std::string CoefficientField::abs_string(const Coeff& a) const {
    if (kind_ == Kind::rationals) {
        mpq_class v = abs(q_of(a));
        return v.get_str();
    }
    return std::to_string(r_of(a));
}

} // namespace gh
