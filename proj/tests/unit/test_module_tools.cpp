// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "testutil.hpp"

using namespace gh;
using namespace gh::test;

namespace {

PolyMatrix random_matrix(TestRng& rng, const RingPtr& R, std::size_t rows, std::size_t cols,
                         std::uint32_t max_deg) {
    PolyMatrix A(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A.set(i, j, random_poly(rng, R, max_deg, 2));
    return A;
}

// Unimodular row operation: add f * (row src) to row dst.
PolyMatrix add_row_multiple(const PolyMatrix& A, std::size_t dst, std::size_t src,
                            const Polynomial& f) {
    PolyMatrix B = A;
    for (std::size_t j = 0; j < A.cols(); ++j) B.set(dst, j, A.at(dst, j) + f * A.at(src, j));
    return B;
}

PolyMatrix add_col_multiple(const PolyMatrix& A, std::size_t dst, std::size_t src,
                            const Polynomial& f) {
    PolyMatrix B = A;
    for (std::size_t i = 0; i < A.rows(); ++i) B.set(i, dst, A.at(i, dst) + f * A.at(i, src));
    return B;
}

} // namespace

TEST_CASE("minor enumeration") {
    auto R = ring_q({"x", "y", "z", "w"});
    PolyMatrix A = matrix_of(R, 2, 2, {"x", "y", "z", "w"});

    SUBCASE("full-size minor is the determinant") {
        auto m = minors(A, 2);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == pp(R, "x*w - y*z"));
    }
    SUBCASE("size zero yields the unit") {
        auto m = minors(A, 0);
        REQUIRE(m.size() == 1);
        CHECK(m[0].is_one());
    }
    SUBCASE("oversize yields nothing") {
        CHECK(minors(A, 3).empty());
    }
    SUBCASE("positions follow row-set-major lexicographic order") {
        PolyMatrix B = matrix_of(R, 2, 3, {"x", "y", "z", "0", "w", "0"});
        auto m = minors(B, 1);
        REQUIRE(m.size() == 6);
        CHECK(m[0] == pp(R, "x"));
        CHECK(m[1] == pp(R, "y"));
        CHECK(m[2] == pp(R, "z"));
        CHECK(m[3] == pp(R, "0"));
        CHECK(m[4] == pp(R, "w"));
        CHECK(m[5] == pp(R, "0"));
        // Zero minors are kept in place.
        CHECK(m[3].is_zero());
    }
    SUBCASE("koszul full minors vanish") {
        auto R3 = ring_q({"x", "y", "z"});
        auto m = minors(koszul_matrix(R3), 3);
        REQUIRE(m.size() == 1);
        CHECK(m[0].is_zero());
    }
    SUBCASE("the size cap is enforced") {
        auto R1 = ring_q({"x"});
        PolyMatrix big(R1, 9, 9);
        CHECK_THROWS_AS(minors(big, 9), ResourceLimitError);
    }
}

TEST_CASE("rank fixtures") {
    auto R = ring_q({"x", "y", "z", "w"});
    CHECK(matrix_rank(matrix_of(R, 2, 2, {"x", "y", "z", "w"})) == 2);
    auto R3 = ring_q({"x", "y", "z"});
    CHECK(matrix_rank(koszul_matrix(R3)) == 2);
    CHECK(matrix_rank(PolyMatrix(R, 2, 3)) == 0);
    CHECK(matrix_rank(PolyMatrix(R, 0, 3)) == 0);
    CHECK(matrix_rank(PolyMatrix::identity(R, 4)) == 4);
}

TEST_CASE("rank equals the largest size of a nonzero minor") {
    auto R = ring_fp(5, {"x", "y"});
    TestRng rng(0x4A4B);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix A = random_matrix(rng, R, 1 + rng.below(3), 1 + rng.below(3), 1);
        std::size_t by_minors = 0;
        for (std::size_t t = 1; t <= std::min(A.rows(), A.cols()); ++t)
            for (const Polynomial& m : minors(A, t))
                if (!m.is_zero()) by_minors = std::max(by_minors, t);
        CHECK(matrix_rank(A) == by_minors);
    }
}

TEST_CASE("minor ideals are invariant under elementary operations") {
    auto R = ring_fp(5, {"x", "y"});
    TestRng rng(0xE1E);
    for (int trial = 0; trial < 12; ++trial) {
        PolyMatrix A = random_matrix(rng, R, 2 + rng.below(2), 2 + rng.below(2), 1);
        Polynomial f = random_poly(rng, R, 1, 2);
        PolyMatrix B = add_row_multiple(A, 0, 1, f);
        PolyMatrix C = add_col_multiple(A, 1, 0, f);
        for (std::size_t t = 1; t <= std::min(A.rows(), A.cols()); ++t) {
            Ideal IA(R, minors(A, t));
            CHECK(IA.equals(Ideal(R, minors(B, t))));
            CHECK(IA.equals(Ideal(R, minors(C, t))));
        }
    }
}

TEST_CASE("fitting ideal fixtures") {
    auto R = ring_q({"x1", "x2"});
    PolyMatrix A = matrix_of(R, 2, 1, {"x1", "x2"});

    SUBCASE("one step below the rows") {
        Ideal F = fitting_ideal(A, 1);
        CHECK(F.equals(ideal_of(R, {"x1", "x2"})));
    }
    SUBCASE("at or above the rows the ideal is the unit") {
        CHECK(fitting_ideal(A, 2).is_unit());
        CHECK(fitting_ideal(A, 5).is_unit());
    }
    SUBCASE("oversize minors give the zero ideal") {
        CHECK(fitting_ideal(A, 0).is_zero());
    }
    SUBCASE("koszul fitting ideal is the 2x2 minor ideal of height 3") {
        auto R3 = ring_q({"x", "y", "z"});
        Ideal F = fitting_ideal(koszul_matrix(R3), 1);
        CHECK(ideal_height(F) == 3);
        // The 2x2 minors generate the full square of the maximal ideal.
        CHECK(F.equals(ideal_of(R3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})));
        CHECK_FALSE(F.is_unit());
    }
}

TEST_CASE("fitting ideals form an ascending chain") {
    auto R = ring_fp(5, {"x", "y"});
    TestRng rng(0xF177);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t rows = 1 + rng.below(3);
        PolyMatrix A = random_matrix(rng, R, rows, 1 + rng.below(3), 1);
        for (std::size_t i = 0; i + 1 <= rows; ++i)
            CHECK(fitting_ideal(A, i + 1).contains(fitting_ideal(A, i)));
        CHECK(fitting_ideal(A, rows).is_unit());
    }
}

TEST_CASE("row ideal fixtures") {
    auto R = ring_q({"x1", "x2"});
    PolyMatrix A = matrix_of(R, 2, 1, {"x1", "x2"});

    SUBCASE("a coordinate row vector picks out a row") {
        PolyMatrix B = matrix_of(R, 2, 2, {"x1", "x2", "x2", "x1^2"});
        Ideal I = row_ideal(B, FreeModuleElement::unit(R, 2, 0));
        CHECK(I.equals(ideal_of(R, {"x1", "x2"})));
    }
    SUBCASE("the zero vector gives the zero ideal") {
        CHECK(row_ideal(A, FreeModuleElement::zero(R, 2)).is_zero());
    }
    SUBCASE("a generic combination") {
        Ideal I = row_ideal(A, vec_of(R, {"x1", "x2"}));
        CHECK(I.equals(ideal_of(R, {"x1^2 + x2^2"})));
    }
    SUBCASE("rank mismatch is rejected") {
        CHECK_THROWS_AS(row_ideal(A, FreeModuleElement::zero(R, 3)), DimensionMismatchError);
    }
}

TEST_CASE("row ideals obey the triangle containment") {
    // Entries of (b + c)A lie in row_ideal(b) + row_ideal(c).
    auto R = ring_fp(5, {"x", "y"});
    TestRng rng(0x0B0E);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t rows = 1 + rng.below(3);
        PolyMatrix A = random_matrix(rng, R, rows, 1 + rng.below(3), 1);
        std::vector<Polynomial> bv, cv;
        for (std::size_t i = 0; i < rows; ++i) {
            bv.push_back(random_poly(rng, R, 1, 2));
            cv.push_back(random_poly(rng, R, 1, 2));
        }
        FreeModuleElement b(R, bv), c(R, cv);
        Ideal sum = ideal_sum(row_ideal(A, b), row_ideal(A, c));
        CHECK(sum.contains(row_ideal(A, b.add(c))));
    }
}

TEST_CASE("symmetric algebra presentations") {
    SUBCASE("a single column gives one linear form") {
        auto R = ring_q({"x1", "x2"});
        SymPresentation S = sym_presentation(matrix_of(R, 2, 1, {"x1", "x2"}));
        CHECK(S.n == 2);
        CHECK(S.extension.extended->variables() ==
              std::vector<std::string>{"T1", "T2", "x1", "x2"});
        CHECK(S.extension.extended->order() == MonomialOrder::block(2));
        REQUIRE(S.defining_ideal.generators().size() == 1);
        CHECK(S.defining_ideal.generators()[0] == pp(S.extension.extended, "x1*T1 + x2*T2"));
    }
    SUBCASE("koszul presentation") {
        auto R = ring_q({"x", "y", "z"});
        SymPresentation S = sym_presentation(koszul_matrix(R));
        REQUIRE(S.defining_ideal.generators().size() == 3);
        const RingPtr& E = S.extension.extended;
        CHECK(S.defining_ideal.generators()[0] == pp(E, "y*T1 - x*T2"));
        CHECK(S.defining_ideal.generators()[1] == pp(E, "z*T1 - x*T3"));
        CHECK(S.defining_ideal.generators()[2] == pp(E, "z*T2 - y*T3"));
        for (const auto& g : S.defining_ideal.generators()) {
            CHECK(g.is_homogeneous());
            for (const Term& t : g.terms()) CHECK(t.mono.degree_window(0, S.n) == 1);
        }
    }
    SUBCASE("the zero matrix gives a polynomial extension") {
        auto R = ring_q({"x", "y"});
        SymPresentation S = sym_presentation(PolyMatrix(R, 3, 2));
        CHECK(S.defining_ideal.is_zero());
        CHECK(S.n == 3);
        // dim Sym = dim R + n for the free module.
        CHECK(krull_dim(S.defining_ideal).dim == 2 + 3);
    }
    SUBCASE("T-name collisions get a uniform suffix") {
        auto R = ring_q({"T1", "x"});
        SymPresentation S = sym_presentation(matrix_of(R, 1, 1, {"x"}));
        CHECK(S.n == 1);
        CHECK(S.extension.extended->nvars() == 3);
        CHECK(S.extension.extended->variable(0) == "T1_");
        CHECK(S.defining_ideal.generators()[0] ==
              pp(S.extension.extended, "x*T1_"));
    }
}

TEST_CASE("dual presentation fixtures") {
    auto R = ring_q({"x", "y"});
    SUBCASE("the plane syzygy dualizes to its transpose pattern") {
        PolyMatrix psi = matrix_of(R, 2, 1, {"y", "-x"});
        PolyMatrix D = dual_presentation(psi);
        REQUIRE(D.rows() == 2);
        REQUIRE(D.cols() == 1);
        CHECK(D.at(0, 0) == pp(R, "x"));
        CHECK(D.at(1, 0) == pp(R, "y"));
    }
    SUBCASE("the zero map dualizes to the free dual") {
        PolyMatrix D = dual_presentation(PolyMatrix(R, 2, 3));
        REQUIRE(D.cols() == 2);
        CHECK(D.column(0) == FreeModuleElement::unit(R, 2, 1).components());
        CHECK(D.column(1) == FreeModuleElement::unit(R, 2, 0).components());
    }
    SUBCASE("an isomorphism dualizes to an injective dual") {
        PolyMatrix D = dual_presentation(PolyMatrix::identity(R, 2));
        CHECK(D.rows() == 2);
        CHECK(D.cols() == 0);
    }
    SUBCASE("the defining identity holds") {
        TestRng rng(0xD0A1);
        auto R5 = ring_fp(5, {"x", "y"});
        for (int trial = 0; trial < 10; ++trial) {
            PolyMatrix psi = random_matrix(rng, R5, 1 + rng.below(3), 1 + rng.below(3), 1);
            PolyMatrix D = dual_presentation(psi);
            CHECK(psi.transpose().mul(D).is_zero());
        }
    }
}

TEST_CASE("order ideal fixtures") {
    auto R = ring_q({"x", "y"});
    SUBCASE("a point on the plane module") {
        PolyMatrix psi = matrix_of(R, 2, 1, {"y", "-x"});
        OrderIdealResult res = order_ideal(psi, vec_of(R, {"x", "0"}));
        CHECK(res.ideal.equals(ideal_of(R, {"x^2"})));
        CHECK(res.x_in_max_ideal);
    }
    SUBCASE("free modules evaluate to the entry ideal") {
        PolyMatrix psi(R, 2, 0);
        OrderIdealResult res = order_ideal(psi, vec_of(R, {"x + 1", "y"}));
        CHECK(res.ideal.equals(ideal_of(R, {"x + 1", "y"})));
        CHECK_FALSE(res.x_in_max_ideal);
    }
    SUBCASE("the zero element has the zero order ideal") {
        PolyMatrix psi = matrix_of(R, 2, 1, {"y", "-x"});
        OrderIdealResult res = order_ideal(psi, FreeModuleElement::zero(R, 2));
        CHECK(res.ideal.is_zero());
        CHECK(res.x_in_max_ideal);
    }
}

TEST_CASE("order ideals are independent of the representative") {
    // Shifting x_vec by any column combination of psi leaves the ideal
    // unchanged, because functionals kill the image of psi.
    auto R = ring_fp(5, {"x", "y"});
    TestRng rng(0x0AD3);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t rows = 1 + rng.below(3);
        std::size_t cols = 1 + rng.below(2);
        PolyMatrix psi = random_matrix(rng, R, rows, cols, 1);
        std::vector<Polynomial> xv;
        for (std::size_t i = 0; i < rows; ++i) xv.push_back(random_poly(rng, R, 1, 2));
        FreeModuleElement x_vec(R, xv);

        std::size_t col = rng.below(cols);
        Polynomial scale = random_poly(rng, R, 1, 2);
        std::vector<Polynomial> shifted;
        for (std::size_t i = 0; i < rows; ++i)
            shifted.push_back(xv[i] + scale * psi.at(i, col));

        Ideal a = order_ideal(psi, x_vec).ideal;
        Ideal b = order_ideal(psi, FreeModuleElement(R, shifted)).ideal;
        CHECK(a.equals(b));
    }
}

TEST_CASE("equidimensionality certificates") {
    SUBCASE("one linear form is a complete intersection") {
        auto R = ring_q({"x1", "x2"});
        SymPresentation S = sym_presentation(matrix_of(R, 2, 1, {"x1", "x2"}));
        auto cert = equidim_certificate(S);
        REQUIRE(cert.has_value());
        CHECK(cert->kind == EquidimCertificate::Kind::complete_intersection);
    }
    SUBCASE("three generators of height two stay undecided") {
        auto R = ring_q({"x", "y", "z"});
        // Sym of the ideal module (x, y, z) presented by the Koszul matrix
        // has three defining generators of height two.
        SymPresentation S = sym_presentation(koszul_matrix(R));
        CHECK(ideal_height(S.defining_ideal) == 2);
        CHECK_FALSE(equidim_certificate(S).has_value());
    }
    SUBCASE("the zero matrix is vacuously a complete intersection") {
        auto R = ring_q({"x", "y"});
        SymPresentation S = sym_presentation(PolyMatrix(R, 2, 2));
        auto cert = equidim_certificate(S);
        REQUIRE(cert.has_value());
        CHECK(cert->kind == EquidimCertificate::Kind::complete_intersection);
    }
}

TEST_CASE("free rank is bounded by the generator counts of image and cokernel") {
    // For F = R^n presented onto N = coker(psi) with relation module
    // M = image(psi), Nakayama gives n = mu(F) <= mu(M) + mu(N) at the
    // irrelevant maximal ideal. M is the cokernel of the syzygy matrix
    // kernel(psi) viewed inside R^cols, so both counts are mu_at_prime
    // evaluations. Unit entries make the inequality non-trivial.
    auto R = ring_fp(5, {"x", "y"});
    Ideal m(R, plist(R, {"x", "y"}));
    TestRng rng(0x137);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 1 + rng.below(3);
        std::size_t cols = 1 + rng.below(3);
        PolyMatrix psi = random_matrix(rng, R, rows, cols, 1);
        std::size_t mu_N = mu_at_prime(psi, m);
        std::size_t mu_M = mu_at_prime(kernel(psi), m);
        CHECK(rows <= mu_M + mu_N);
    }
    // Pinned instance with a unit entry: psi = [[x, 0], [0, 1]] has
    // mu(N) = 1 and a free image of rank 2.
    PolyMatrix psi = matrix_of(R, 2, 2, {"x", "0", "0", "1"});
    CHECK(mu_at_prime(psi, m) == 1);
    CHECK(mu_at_prime(kernel(psi), m) == 2);
}
