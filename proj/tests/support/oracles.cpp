// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

namespace gh::test {
namespace {

// All exponent vectors over nvars with total degree <= max_degree, in a
// fixed (graded, then recursive) enumeration order.
void enumerate_below(std::size_t nvars, std::uint32_t budget, std::vector<std::uint32_t>& cur,
                     std::size_t pos, std::vector<std::vector<std::uint32_t>>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
        cur[pos] = e;
        enumerate_below(nvars, budget - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<std::vector<std::uint32_t>> monomials_up_to(std::size_t nvars,
                                                        std::uint32_t max_degree) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(nvars, 0);
    enumerate_below(nvars, max_degree, cur, 0, out);
    return out;
}

// Row reducer over a coefficient field: rows are reduced against the
// stored pivots and, if a nonzero entry survives, normalized and kept.
class RowSpan {
public:
    explicit RowSpan(const CoefficientField& field) : field_(field) {}

    // Reduces row in place against the span; returns the first nonzero
    // position afterwards, or row.size() when the row reduced to zero.
    std::size_t reduce(std::vector<Coeff>& row) const {
        for (const auto& [col, pivot] : pivots_) {
            if (field_.is_zero(row[col])) continue;
            Coeff factor = row[col];
            for (std::size_t j = col; j < row.size(); ++j)
                row[j] = field_.sub(row[j], field_.mul(factor, pivot[j]));
        }
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!field_.is_zero(row[j])) return j;
        return row.size();
    }

    // Reduce-and-insert; returns false when the row was already in the span.
    bool insert(std::vector<Coeff> row) {
        std::size_t lead = reduce(row);
        if (lead == row.size()) return false;
        Coeff inv = field_.inv(row[lead]);
        for (std::size_t j = lead; j < row.size(); ++j) row[j] = field_.mul(row[j], inv);
        pivots_[lead] = std::move(row);
        return true;
    }

    bool contains(std::vector<Coeff> row) const { return reduce(row) == row.size(); }

private:
    const CoefficientField& field_;
    std::map<std::size_t, std::vector<Coeff>> pivots_;
};

} // namespace

bool oracle_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                       std::uint32_t max_degree) {
    if (f.is_zero()) return true;
    const RingPtr& ring = f.ring();
    const CoefficientField& field = ring->field();
    if (f.total_degree() > max_degree) return false;

    auto cols = monomials_up_to(ring->nvars(), max_degree);
    std::map<std::vector<std::uint32_t>, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;

    auto to_row = [&](const Polynomial& p) {
        std::vector<Coeff> row(cols.size(), field.zero());
        for (const Term& t : p.terms()) row[col_index.at(t.mono.exponents())] = t.coeff;
        return row;
    };

    RowSpan span(field);
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        std::uint32_t gdeg = static_cast<std::uint32_t>(g.total_degree());
        if (gdeg > max_degree) continue;
        for (const auto& exps : monomials_up_to(ring->nvars(), max_degree - gdeg)) {
            // Multiplying by a monomial below the slack keeps every term of
            // the product within the bound only if g's terms all fit; terms
            // of g have degree <= gdeg, so deg(m * term) <= max_degree.
            span.insert(to_row(g.term_mul(field.one(), Monomial(exps))));
        }
    }
    return span.contains(to_row(f));
}

DimensionResult oracle_dimension(const Ideal& I) {
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars();

    std::vector<std::uint64_t> lm_masks;
    for (const Polynomial& g : I.basis()) lm_masks.push_back(g.leading_monomial().support_mask());

    DimensionResult result;
    result.dim = -1;
    bool found = false;
    std::vector<std::uint64_t> best_mask{0};

    // Include-first depth-first enumeration of all 2^n subsets, testing
    // independence only at leaves. Strict improvement keeps the first
    // maximum encountered, which is the lexicographically first witness.
    auto independent = [&](std::uint64_t subset) {
        for (std::uint64_t m : lm_masks)
            if ((m & ~subset) == 0) return false;
        return true;
    };
    std::uint64_t chosen = 0;
    auto dfs = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            if (!independent(chosen)) return;
            long size = static_cast<long>(__builtin_popcountll(chosen));
            if (!found || size > result.dim) {
                found = true;
                result.dim = size;
                best_mask[0] = chosen;
            }
            return;
        }
        chosen |= (1ULL << var);
        self(self, var + 1);
        chosen &= ~(1ULL << var);
        self(self, var + 1);
    };
    dfs(dfs, 0);

    if (!found) {
        result.dim = -1;
        result.height = static_cast<long>(n);
        return result;
    }
    result.height = static_cast<long>(n) - result.dim;
    for (std::size_t i = 0; i < n; ++i)
        if (best_mask[0] & (1ULL << i)) result.witness_independent_set.push_back(ring->variable(i));
    return result;
}

std::vector<FreeModuleElement> oracle_syzygies(const PolyMatrix& A, std::uint32_t max_degree) {
    const RingPtr& ring = A.ring();
    const CoefficientField& field = ring->field();
    std::size_t rows = A.rows();
    std::size_t cols = A.cols();

    std::uint32_t a_deg = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a_deg = std::max(a_deg, static_cast<std::uint32_t>(A.at(i, j).total_degree()));

    auto unknowns = monomials_up_to(ring->nvars(), max_degree);
    auto targets = monomials_up_to(ring->nvars(), max_degree + a_deg);
    std::map<std::vector<std::uint32_t>, std::size_t> target_index;
    for (std::size_t i = 0; i < targets.size(); ++i) target_index[targets[i]] = i;

    // Equation matrix columns are unknowns (j, m): the coefficient vector of
    // q_j picks up x^m. Rows are (output row i, target monomial t).
    std::size_t n_unknowns = cols * unknowns.size();
    std::size_t n_equations = rows * targets.size();
    std::vector<std::vector<Coeff>> eq(n_equations, std::vector<Coeff>(n_unknowns, field.zero()));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t m = 0; m < unknowns.size(); ++m) {
            std::size_t u = j * unknowns.size() + m;
            Monomial mono(unknowns[m]);
            for (std::size_t i = 0; i < rows; ++i) {
                Polynomial prod = A.at(i, j).term_mul(field.one(), mono);
                for (const Term& t : prod.terms()) {
                    std::size_t r = i * targets.size() + target_index.at(t.mono.exponents());
                    eq[r][u] = field.add(eq[r][u], t.coeff);
                }
            }
        }
    }

    // Gauss-Jordan to reduced row echelon form; free columns parameterize
    // the nullspace.
    std::vector<std::size_t> pivot_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_unknowns && rank < n_equations; ++col) {
        std::size_t sel = n_equations;
        for (std::size_t r = rank; r < n_equations; ++r)
            if (!field.is_zero(eq[r][col])) {
                sel = r;
                break;
            }
        if (sel == n_equations) continue;
        std::swap(eq[rank], eq[sel]);
        Coeff inv = field.inv(eq[rank][col]);
        for (std::size_t c = col; c < n_unknowns; ++c) eq[rank][c] = field.mul(eq[rank][c], inv);
        for (std::size_t r = 0; r < n_equations; ++r) {
            if (r == rank || field.is_zero(eq[r][col])) continue;
            Coeff factor = eq[r][col];
            for (std::size_t c = col; c < n_unknowns; ++c)
                eq[r][c] = field.sub(eq[r][c], field.mul(factor, eq[rank][c]));
        }
        pivot_of_row.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(n_unknowns, false);
    for (std::size_t c : pivot_of_row) is_pivot[c] = true;

    std::vector<FreeModuleElement> out;
    for (std::size_t free_col = 0; free_col < n_unknowns; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Coeff> solution(n_unknowns, field.zero());
        solution[free_col] = field.one();
        for (std::size_t r = 0; r < rank; ++r)
            solution[pivot_of_row[r]] = field.neg(eq[r][free_col]);
        std::vector<Polynomial> components;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Term> terms;
            for (std::size_t m = 0; m < unknowns.size(); ++m) {
                const Coeff& c = solution[j * unknowns.size() + m];
                if (!field.is_zero(c)) terms.push_back(Term{Monomial(unknowns[m]), c});
            }
            components.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
        out.emplace_back(ring, std::move(components));
    }
    return out;
}

bool oracle_radical_member(const Polynomial& f, const Ideal& I, std::uint32_t max_power) {
    for (std::uint32_t k = 1; k <= max_power; ++k)
        if (I.contains(f.pow(k))) return true;
    return false;
}

} // namespace gh::test
