// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gheights/checks.hpp"
#include "gheights/errors.hpp"
#include "gheights/free_module.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/polynomial.hpp"
#include "gheights/ring.hpp"

namespace gh {
namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::size_t sample_index) {
        std::uint64_t s = seed ^ static_cast<std::uint64_t>(sample_index + 1);
        state_ = splitmix64_next(s);
    }
    std::uint64_t next() { return splitmix64_next(state_); }

private:
    std::uint64_t state_ = 0;
};

// Exponent vectors of the given total degree, ascending lexicographic.
void compositions(std::size_t degree, std::size_t parts, std::vector<std::uint32_t>& prefix,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (parts == 1) {
        prefix.push_back(static_cast<std::uint32_t>(degree));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= degree; ++first) {
        prefix.push_back(static_cast<std::uint32_t>(first));
        compositions(degree - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Monomial> sample_monomials(std::size_t vars, std::size_t max_degree,
                                       bool homogeneous) {
    std::vector<std::vector<std::uint32_t>> exps;
    std::vector<std::uint32_t> prefix;
    for (std::size_t d = homogeneous ? max_degree : 0; d <= max_degree; ++d)
        compositions(d, vars, prefix, exps);
    std::vector<Monomial> out;
    out.reserve(exps.size());
    for (auto& e : exps) out.emplace_back(std::move(e));
    return out;
}

Polynomial sample_polynomial(SampleStream& stream, const RingPtr& ring,
                             const std::vector<Monomial>& candidates, std::int64_t p) {
    std::vector<Term> terms;
    for (const auto& m : candidates) {
        if ((stream.next() & 1) == 0) continue;
        std::int64_t c = 1 + static_cast<std::int64_t>(stream.next() %
                                                       static_cast<std::uint64_t>(p - 1));
        terms.push_back(Term{m, ring->field().from_integer(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

bool needs_vector(const std::string& theorem) {
    return theorem == "lemma_1_1" || theorem == "gpit" || theorem == "macaulay_ee" ||
           theorem == "row_ideal_equidim";
}

std::size_t default_param(const SweepConfig& c) {
    if (c.theorem_id == "bruns") return std::min(c.rows, c.cols);
    if (c.theorem_id == "macaulay_ee") return std::min(c.rows, c.cols + 1);
    return c.rows; // kwiecinski flavors
}

std::string serialize_session(const SweepConfig& c, const PolyMatrix& A,
                              const std::optional<FreeModuleElement>& vec,
                              std::size_t sample_index) {
    std::ostringstream os;
    os << "# reproduction: theorem " << c.theorem_id << ", sample " << sample_index << ", seed "
       << c.seed << "\n";
    os << "[ring]\n";
    os << "vars = ";
    for (std::size_t i = 0; i < A.ring()->nvars(); ++i) {
        if (i) os << ", ";
        os << A.ring()->variable(i);
    }
    os << "\n";
    os << "field = Fp " << c.characteristic << "\n";
    os << "order = grevlex\n\n";
    os << "[matrix A]\n";
    os << "rows = " << A.rows() << "\n";
    os << "cols = " << A.cols() << "\n";
    for (std::size_t r = 0; r < A.rows(); ++r) {
        if (A.cols() == 0) continue;
        os << "row = ";
        for (std::size_t cidx = 0; cidx < A.cols(); ++cidx) {
            if (cidx) os << "; ";
            os << A.at(r, cidx).to_string();
        }
        os << "\n";
    }
    if (vec) {
        os << "\n[vector b]\n";
        os << "entries = ";
        for (std::size_t i = 0; i < vec->rank(); ++i) {
            if (i) os << "; ";
            os << vec->component(i).to_string();
        }
        os << "\n";
    }
    return os.str();
}

BoundReport run_one(const SweepConfig& c, std::size_t param, const PolyMatrix& A,
                    const std::optional<FreeModuleElement>& vec) {
    if (c.theorem_id == "lemma_1_1") return check_lemma_1_1(A, *vec);
    if (c.theorem_id == "gpit") return check_gpit(A, *vec);
    if (c.theorem_id == "macaulay_ee") return check_macaulay_ee(A, *vec, param);
    if (c.theorem_id == "bruns") return check_bruns(A, param);
    if (c.theorem_id == "row_ideal_equidim") {
        auto cert = equidim_certificate(sym_presentation(A));
        return check_row_ideal_equidim(A, *vec, cert, PrimeWitness::zero_ideal(A.ring()));
    }
    if (c.theorem_id == "kwiecinski") {
        auto cert = equidim_certificate(sym_presentation(A));
        return check_kwiecinski(A, param, cert);
    }
    if (c.theorem_id == "kwiecinski_refined") {
        auto cert = equidim_certificate(sym_presentation(A));
        return check_kwiecinski_refined(A, param, cert, std::nullopt);
    }
    if (c.theorem_id == "huneke_rossi") return check_huneke_rossi(A, {});
    throw ConfigError("unsupported sweep theorem '" + c.theorem_id + "'");
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    if (config.samples < 1) throw ConfigError("sample count must be at least 1");
    if (config.vars < 1) throw ConfigError("variable count must be at least 1");
    static const char* supported[] = {"lemma_1_1",  "gpit",       "macaulay_ee",
                                      "bruns",      "kwiecinski", "kwiecinski_refined",
                                      "huneke_rossi", "row_ideal_equidim"};
    if (std::find_if(std::begin(supported), std::end(supported), [&](const char* s) {
            return config.theorem_id == s;
        }) == std::end(supported))
        throw ConfigError("unsupported sweep theorem '" + config.theorem_id + "'");

    CoefficientField field = [&] {
        try {
            return CoefficientField::prime_field(config.characteristic);
        } catch (const Error& e) {
            throw ConfigError(std::string("bad characteristic: ") + e.what());
        }
    }();

    std::optional<ScopedResourceLimits> scoped;
    if (config.limits) scoped.emplace(*config.limits);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < config.vars; ++i) names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = PolyRing::create(names, field, MonomialOrder::grevlex());
    std::vector<Monomial> candidates =
        sample_monomials(config.vars, config.max_degree, config.homogeneous);
    std::size_t param = config.param.value_or(default_param(config));

    SweepResult result;
    std::ostringstream csv;
    csv << "sample_index,rows,cols,char,theorem,lhs,rhs,slack,holds,vacuous,exactness,"
           "hypotheses_status,seed\n";

    for (std::size_t k = 0; k < config.samples; ++k) {
        SampleStream stream(config.seed, k);
        PolyMatrix A(ring, config.rows, config.cols);
        for (std::size_t r = 0; r < config.rows; ++r)
            for (std::size_t c = 0; c < config.cols; ++c)
                A.set(r, c, sample_polynomial(stream, ring, candidates, config.characteristic));
        std::optional<FreeModuleElement> vec;
        if (needs_vector(config.theorem_id)) {
            std::vector<Polynomial> comps;
            for (std::size_t i = 0; i < config.rows; ++i)
                comps.push_back(sample_polynomial(stream, ring, candidates, config.characteristic));
            vec.emplace(ring, std::move(comps));
        }

        SweepRecord record;
        record.sample_index = k;
        std::string status;
        try {
            record.report = run_one(config, param, A, vec);
            status = to_string(worst_status(record.report->hypotheses));
        } catch (const HypothesisViolatedError&) {
            record.failure = "hypothesis_violated";
            ++result.hypothesis_violated_count;
        } catch (const ResourceLimitError&) {
            record.failure = "resource_limited";
            ++result.resource_limited_count;
        }
        if (!record.report) status = record.failure;

        csv << k << ',' << config.rows << ',' << config.cols << ',' << config.characteristic
            << ',' << config.theorem_id << ',';
        if (record.report) {
            const BoundReport& rep = *record.report;
            csv << rep.lhs << ',' << rep.rhs << ',' << rep.slack << ','
                << (rep.holds ? "true" : "false") << ',' << (rep.vacuous ? "true" : "false") << ','
                << to_string(rep.exactness) << ',';
        } else {
            csv << ",,,,,,";
        }
        csv << status << ',' << config.seed << "\n";

        bool violation = false;
        if (record.report) {
            const BoundReport& rep = *record.report;
            if (rep.holds) ++result.holds_count;
            if (rep.vacuous) ++result.vacuous_count;
            if (!rep.vacuous) ++result.slack_histogram[rep.slack];
            HypStatus worst = worst_status(rep.hypotheses);
            if (worst == HypStatus::unverified) ++result.hypothesis_unverified_count;
            violation = !rep.holds && worst == HypStatus::verified;
        }
        result.records.push_back(std::move(record));

        if (violation) {
            result.violation = SweepViolation{k, serialize_session(config, A, vec, k)};
            break;
        }
    }
    result.csv = csv.str();
    return result;
}

} // namespace gh
