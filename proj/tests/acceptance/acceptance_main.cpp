// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: seven end-to-end criteria, one PASS/FAIL line each.
// Exits 0 only if every criterion passes within its time budget.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "testutil.hpp"

using namespace gh;
using namespace gh::test;

namespace {

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    // Returns an empty string on success, a reason on failure.
    std::string (*body)();
};

std::string fail(const std::string& reason) { return reason; }

template <typename T>
std::string expect_eq(const T& got, const T& want, const std::string& what) {
    if (got == want) return {};
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    return os.str();
}

// ---------------------------------------------------------------- criterion 1

std::vector<std::vector<Polynomial>> groebner_fixtures() {
    std::vector<std::vector<Polynomial>> out;
    {
        auto R = ring_q({"z", "y", "x"}, MonomialOrder::lex());
        out.push_back(plist(R, {"y - x^2", "z - x^3"}));
    }
    {
        auto R = ring_q({"x", "y"});
        out.push_back(plist(R, {"x^2 - y", "x*y - 1"}));
        out.push_back(plist(R, {"x^2", "x*y + y^2"}));
    }
    {
        auto R = ring_q({"x", "y", "z"});
        out.push_back(plist(R, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
        out.push_back(plist(R, {"x*y - z^2", "y*z - x^2", "x*z - y^2"}));
    }
    {
        auto R = ring_fp(5, {"x", "y", "z"});
        out.push_back(plist(R, {"x^2 + y*z", "y^2 + x*z", "x + y + z"}));
    }
    return out;
}

std::string criterion_groebner() {
    TestRng rng(0xAC01);
    for (const auto& gens : groebner_fixtures()) {
        const RingPtr& R = gens.front().ring();
        Ideal I(R, gens);
        const std::vector<Polynomial>& base = I.basis();

        // Reduced bases are unique: 20 random generator permutations.
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Polynomial> shuffled = gens;
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
            Ideal J(R, shuffled);
            if (J.basis() != base) return fail("permuted generators changed the reduced basis");
        }

        // Every S-polynomial of the computed basis reduces to zero.
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j) {
                Polynomial s = s_polynomial(base[i], base[j]);
                if (!normal_form(s, base).is_zero())
                    return fail("an S-polynomial of a computed basis does not reduce to zero");
            }
    }

    // Membership agrees with the truncated linear-algebra oracle on 100
    // random ideals over F5 in <= 3 variables with generators of degree
    // <= 3.
    auto R = ring_fp(5, {"x", "y", "z"});
    std::size_t certified = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> gens;
        std::size_t ngens = 1 + rng.below(3);
        for (std::size_t g = 0; g < ngens; ++g)
            gens.push_back(random_poly(rng, R, 3, 3));
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const Polynomial& p) { return p.is_zero(); }),
                   gens.end());
        if (gens.empty()) gens.push_back(pp(R, "x"));
        Ideal I(R, gens);

        // A combination built from the generators is a member, and the
        // oracle certifies it at the construction degree.
        Polynomial f = Polynomial::zero(R);
        std::size_t bound = 0;
        for (const auto& g : gens) {
            Polynomial mult = random_poly(rng, R, 2, 2);
            f = f + mult * g;
            bound = std::max(bound, mult.is_zero() ? std::size_t{0}
                                                   : mult.total_degree() + g.total_degree());
        }
        if (!f.is_zero()) {
            if (!I.contains(f)) return fail("membership rejected a constructed combination");
            if (!oracle_membership(f, gens, bound))
                return fail("the oracle rejected a constructed combination");
            ++certified;
        }

        // Random polynomials: the oracle certificate implies membership,
        // and non-membership implies the oracle finds nothing.
        Polynomial h = random_poly(rng, R, 3, 3);
        bool member = I.contains(h);
        bool oracle = oracle_membership(h, gens, 6);
        if (oracle && !member) return fail("oracle certified a polynomial membership rejects");
        if (!member && oracle) return fail("non-member certified by the oracle");
    }
    if (certified < 50) return fail("too few certified membership cross-checks");
    return {};
}

// ---------------------------------------------------------------- criterion 2

std::string criterion_dimension() {
    std::vector<Ideal> fixtures;
    {
        auto R = ring_q({"x", "y"});
        fixtures.emplace_back(R, plist(R, {}));
        fixtures.emplace_back(R, plist(R, {"x*y"}));
        fixtures.emplace_back(R, plist(R, {"x", "y"}));
        fixtures.emplace_back(R, plist(R, {"x^2 + 1"}));
    }
    {
        auto R = ring_q({"x", "y", "z"});
        fixtures.emplace_back(R, plist(R, {"x*y", "x*z"}));
        fixtures.emplace_back(R, plist(R, {"x*y - z^2"}));
        fixtures.emplace_back(R, plist(R, {"x", "y", "z"}));
        fixtures.emplace_back(R, plist(R, {"x*z", "y*z"}));
        Ideal unit(R, plist(R, {"1"}));
        fixtures.push_back(unit);
    }
    {
        auto R = ring_fp(5, {"a", "b", "c", "d", "e"});
        fixtures.emplace_back(R, plist(R, {"a*b", "c*d", "a*e"}));
        fixtures.emplace_back(R, plist(R, {"a*c - b^2", "b*d - c^2"}));
    }
    {
        auto R = ring_fp(5, {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"});
        fixtures.emplace_back(R, plist(R, {"x1*x2", "x3*x4", "x5*x6*x7"}));
        fixtures.emplace_back(R, plist(R, {"x1*x5 - x2*x4", "x8^2"}));
    }
    TestRng rng(0xAC02);
    auto R3 = ring_fp(5, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t g = 0; g < n; ++g) gens.push_back(random_poly(rng, R3, 2, 2));
        fixtures.emplace_back(R3, gens);
    }

    for (const Ideal& I : fixtures) {
        DimensionResult got = krull_dim(I);
        DimensionResult want = oracle_dimension(I);
        if (got.dim != want.dim) return fail("dim disagrees with the exhaustive oracle");
        if (got.height != want.height) return fail("height disagrees with the exhaustive oracle");
        if (got.witness_independent_set != want.witness_independent_set)
            return fail("witness disagrees with the exhaustive oracle");
        if (!I.is_unit()) {
            long n = static_cast<long>(I.ring()->nvars());
            if (got.dim + got.height != n) return fail("dim + height != n on a proper ideal");
        }
    }
    return {};
}

// ---------------------------------------------------------------- criterion 3

std::string report_equality(const BoundReport& r, long value, const std::string& what) {
    if (auto e = expect_eq(r.lhs, value, what + " lhs"); !e.empty()) return e;
    if (auto e = expect_eq(r.rhs, value, what + " rhs"); !e.empty()) return e;
    if (auto e = expect_eq(r.slack, 0L, what + " slack"); !e.empty()) return e;
    if (!r.holds) return what + ": bound does not hold";
    if (r.vacuous) return what + ": unexpectedly vacuous";
    HypStatus worst = worst_status(r.hypotheses);
    if (worst != HypStatus::verified && worst != HypStatus::asserted)
        return what + ": a hypothesis is neither verified nor asserted";
    return {};
}

std::string criterion_equalities() {
    using clock = std::chrono::steady_clock;
    auto check_time = [](clock::time_point start, const char* what) -> std::string {
        double s = std::chrono::duration<double>(clock::now() - start).count();
        if (s >= 10.0) return std::string(what) + " exceeded its 10 s budget";
        return {};
    };

    // (a) Free modules: the order-ideal bound specializes to the
    // principal ideal theorem, lhs = rhs = n for n = 1..4.
    for (std::size_t n = 1; n <= 4; ++n) {
        auto start = clock::now();
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        auto R = ring_q(names);
        PolyMatrix psi(R, n, 0);
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(R, i));
        BoundReport r = check_gpit(psi, FreeModuleElement(R, comps));
        if (auto e = report_equality(r, static_cast<long>(n), "free-module bound"); !e.empty())
            return e;
        if (r.exactness != Exactness::exact) return fail("free-module bound not exact");
        if (auto e = check_time(start, "free-module bound"); !e.empty()) return e;
    }

    // (b) Hypersurface: coker of the (x1,x2) column, i = 2.
    {
        auto start = clock::now();
        auto R = ring_q({"x1", "x2"});
        PolyMatrix A = matrix_of(R, 2, 1, {"x1", "x2"});
        BoundReport r = check_kwiecinski(A, 2, equidim_certificate(sym_presentation(A)));
        if (auto e = report_equality(r, 2, "hypersurface bound"); !e.empty()) return e;
        if (worst_status(r.hypotheses) != HypStatus::verified)
            return fail("hypersurface certificate not verified");
        if (auto e = check_time(start, "hypersurface bound"); !e.empty()) return e;
    }

    // (c) Fully generic 2x3 matrix: height of the 2-minors is exactly
    // rows + cols - 2t + 1 = 2.
    {
        auto start = clock::now();
        auto R = ring_q({"a", "b", "c", "d", "e", "f"});
        PolyMatrix A = matrix_of(R, 2, 3, {"a", "b", "c", "d", "e", "f"});
        BoundReport r = check_bruns(A, 2);
        if (auto e = report_equality(r, 2, "generic 2x3 bound"); !e.empty()) return e;
        if (r.exactness != Exactness::exact) return fail("generic 2x3 bound not exact");
        if (auto e = check_time(start, "generic 2x3 bound"); !e.empty()) return e;
    }

    // (d) Koszul syzygy matrix of (x, y, z): the refined bound at the
    // irrelevant maximal ideal closes the gap, lhs = rhs = 3.
    {
        auto start = clock::now();
        auto R = ring_q({"x", "y", "z"});
        PolyMatrix K = koszul_matrix(R);
        EquidimCertificate cert;
        cert.kind = EquidimCertificate::Kind::user_asserted;
        cert.detail = "symmetric algebra of the maximal ideal";
        BoundReport r = check_kwiecinski_refined(K, 2, cert, PrimeWitness::irrelevant_maximal(R));
        if (auto e = report_equality(r, 3, "refined Koszul bound"); !e.empty()) return e;
        if (r.exactness != Exactness::exact) return fail("refined Koszul bound not exact");
        if (auto e = check_time(start, "refined Koszul bound"); !e.empty()) return e;
    }

    // (e) Dimension formula on the Koszul example: dim Sym = 4,
    // attained at the zero witness.
    {
        auto start = clock::now();
        auto R = ring_q({"x", "y", "z"});
        BoundReport r = check_huneke_rossi(koszul_matrix(R), {});
        if (auto e = report_equality(r, 4, "dimension formula"); !e.empty()) return e;
        if (r.exactness != Exactness::exact) return fail("dimension formula not exact");
        bool attained = false;
        for (const auto& n : r.notes)
            if (n.find("equality attained at witness (0)") != std::string::npos) attained = true;
        if (!attained) return fail("equality not attained at the zero witness");
        if (auto e = check_time(start, "dimension formula"); !e.empty()) return e;
    }
    return {};
}

// ---------------------------------------------------------------- criterion 4

std::string criterion_vacuity() {
    auto R = ring_q({"x", "y", "z"});
    PolyMatrix K = koszul_matrix(R);
    BoundReport r = check_kwiecinski(K, 2, equidim_certificate(sym_presentation(K)));
    if (!r.vacuous) return fail("the Koszul saturation bound is not vacuous");
    if (!r.holds) return fail("a vacuous report must hold");

    // The vacuity has the predicted cause: the two Fitting ideals have
    // the same radical, so no component avoids the higher one.
    Ideal f1 = fitting_ideal(K, 1);
    Ideal f2 = fitting_ideal(K, 2);
    for (const auto& g : f1.generators())
        if (!radical_member(g, f2)) return fail("a Fitt_1 generator is not in the radical of Fitt_2");
    for (const auto& g : f2.generators())
        if (!radical_member(g, f1)) return fail("a Fitt_2 generator is not in the radical of Fitt_1");
    return {};
}

// ---------------------------------------------------------------- criterion 5

std::string criterion_sweeps() {
    struct Shape {
        const char* theorem;
        std::size_t rows, cols;
    };
    const Shape shapes[] = {{"bruns", 2, 3},      {"macaulay_ee", 2, 1}, {"kwiecinski", 2, 1},
                            {"kwiecinski", 2, 2}, {"gpit", 2, 0},        {"lemma_1_1", 2, 1}};
    for (const Shape& s : shapes) {
        SweepConfig config;
        config.theorem_id = s.theorem;
        config.rows = s.rows;
        config.cols = s.cols;
        config.characteristic = 5;
        config.max_degree = 1;
        config.homogeneous = true;
        config.samples = 200;
        config.seed = 42;
        SweepResult first = run_sweep(config);
        if (first.violation)
            return fail(std::string("violation in the ") + s.theorem + " sweep at sample " +
                        std::to_string(first.violation->sample_index));
        SweepResult second = run_sweep(config);
        if (second.csv != first.csv)
            return fail(std::string("the ") + s.theorem + " sweep CSV is not reproducible");
    }
    return {};
}

// ---------------------------------------------------------------- criterion 6

std::string criterion_order_ideal() {
    TestRng rng(0xAC06);
    auto R = ring_fp(5, {"x", "y", "z"});
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 2 + rng.below(2);
        std::size_t cols = 1 + rng.below(3);
        PolyMatrix psi(R, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) psi.set(r, c, random_poly_in_m(rng, R, 2, 2));
        std::vector<Polynomial> comps;
        for (std::size_t r = 0; r < rows; ++r) comps.push_back(random_poly_in_m(rng, R, 2, 2));
        FreeModuleElement x(R, comps);

        std::size_t j = rng.below(cols);
        std::vector<Polynomial> shifted = comps;
        for (std::size_t r = 0; r < rows; ++r) shifted[r] = shifted[r] + psi.at(r, j);
        FreeModuleElement x2(R, shifted);

        OrderIdealResult a = order_ideal(psi, x);
        OrderIdealResult b = order_ideal(psi, x2);
        for (const auto& g : a.ideal.generators())
            if (!b.ideal.contains(g))
                return fail("order ideal changed after adding a presentation column");
        for (const auto& g : b.ideal.generators())
            if (!a.ideal.contains(g))
                return fail("order ideal changed after adding a presentation column");
    }
    return {};
}

// ---------------------------------------------------------------- criterion 7

std::string criterion_generator_counts() {
    TestRng rng(0xAC07);
    auto R = ring_fp(5, {"x", "y", "z"});
    std::vector<Polynomial> mgens = plist(R, {"x", "y", "z"});
    Ideal max_ideal(R, mgens);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng.below(3);
        std::size_t cols = rng.below(4);
        PolyMatrix psi(R, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) psi.set(r, c, random_poly_in_m(rng, R, 2, 2));
        std::size_t mu_n = mu_at_prime(psi, max_ideal);
        std::size_t mu_m = mu_at_prime(kernel(psi), max_ideal);
        if (rows > mu_m + mu_n)
            return fail("a free rank exceeded the sum of the generator counts");
    }
    return {};
}

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Groebner core: permutation-stable reduced bases, S-polynomial reduction, oracle membership", 60.0,
         criterion_groebner},
        {2, "dimension and height agree with the exhaustive oracle", 30.0, criterion_dimension},
        {3, "curated equalities report slack 0", 50.0, criterion_equalities},
        {4, "Koszul saturation bound is vacuous with matching Fitting radicals", 60.0,
         criterion_vacuity},
        {5, "six 200-sample sweeps: no violations, byte-identical CSV", 300.0, criterion_sweeps},
        {6, "order ideals are independent of the representative", 60.0, criterion_order_ideal},
        {7, "free rank bounded by image and cokernel generator counts", 60.0,
         criterion_generator_counts},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && elapsed >= c.budget_seconds)
            reason = "exceeded the time budget of " + std::to_string(c.budget_seconds) + " s";
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (reason.empty() ? "PASS" : "FAIL") << " criterion " << c.number << " (" << elapsed
             << "s): " << c.label;
        if (!reason.empty()) line << " [" << reason << "]";
        std::cout << line.str() << "\n";
        if (!reason.empty()) all_pass = false;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all_pass ? 0 : 1;
}
