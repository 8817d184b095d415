// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_TESTS_TESTUTIL_HPP
#define GHEIGHTS_TESTS_TESTUTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gheights/gheights.hpp"

namespace gh::test {

inline RingPtr ring_q(std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex()) {
    return PolyRing::create(std::move(vars), CoefficientField::rationals(), order);
}

inline RingPtr ring_fp(std::int64_t p, std::vector<std::string> vars,
                       MonomialOrder order = MonomialOrder::grevlex()) {
    return PolyRing::create(std::move(vars), CoefficientField::prime_field(p), order);
}

inline Polynomial pp(const RingPtr& ring, const std::string& text) {
    return parse_polynomial(ring, text);
}

inline std::vector<Polynomial> plist(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(pp(ring, t));
    return out;
}

inline Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
    return Ideal(ring, plist(ring, gens));
}

inline PolyMatrix matrix_of(const RingPtr& ring, std::size_t rows, std::size_t cols,
                            const std::vector<std::string>& entries) {
    return PolyMatrix(ring, rows, cols, plist(ring, entries));
}

inline FreeModuleElement vec_of(const RingPtr& ring, const std::vector<std::string>& entries) {
    return FreeModuleElement(ring, plist(ring, entries));
}

// First syzygy matrix of (x, y, z): its columns are the Koszul relations
// y*e1 - x*e2, z*e1 - x*e3, z*e2 - y*e3. Requires variables named x, y, z.
inline PolyMatrix koszul_matrix(const RingPtr& ring) {
    return matrix_of(ring, 3, 3, {"y", "z", "0", "-x", "0", "z", "0", "-x", "-y"});
}

// Deterministic 64-bit mixing generator for test sampling.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

inline Monomial random_monomial(TestRng& rng, std::size_t vars, std::uint32_t max_total_degree) {
    std::vector<std::uint32_t> exps(vars, 0);
    std::uint32_t degree = static_cast<std::uint32_t>(rng.below(max_total_degree + 1));
    for (std::uint32_t d = 0; d < degree; ++d) ++exps[rng.below(vars)];
    return Monomial(std::move(exps));
}

// Nonzero coefficient: 1..p-1 in a prime field, -4..4 \ {0} over Q.
inline Coeff random_nonzero_coeff(TestRng& rng, const CoefficientField& field) {
    if (field.kind() == CoefficientField::Kind::prime_field)
        return field.from_integer(1 + static_cast<long>(rng.below(
                                          static_cast<std::uint64_t>(field.characteristic() - 1))));
    long v = static_cast<long>(rng.below(8)) - 4;
    if (v >= 0) ++v;
    return field.from_integer(v);
}

inline Polynomial random_poly(TestRng& rng, const RingPtr& ring, std::uint32_t max_total_degree,
                              std::size_t max_terms) {
    std::vector<Term> terms;
    std::size_t count = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < count; ++i)
        terms.push_back(Term{random_monomial(rng, ring->nvars(), max_total_degree),
                             random_nonzero_coeff(rng, ring->field())});
    return Polynomial::from_terms(ring, std::move(terms));
}

// Random polynomial with zero constant term (an element of m).
inline Polynomial random_poly_in_m(TestRng& rng, const RingPtr& ring,
                                   std::uint32_t max_total_degree, std::size_t max_terms) {
    Polynomial f = random_poly(rng, ring, max_total_degree, max_terms);
    return f.sub(Polynomial::constant(ring, f.constant_coeff()));
}

} // namespace gh::test

#endif
