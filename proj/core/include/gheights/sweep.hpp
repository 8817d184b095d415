// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_SWEEP_HPP
#define GHEIGHTS_SWEEP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gheights/limits.hpp"
#include "gheights/report.hpp"

namespace gh {

// Random-instance sweep over one bound check.
//
// The generator is splitmix64: state advances by adding
// 0x9E3779B97F4A7C15, and the output mixes the new state with
// xor-shifts (30, 27, 31) and the constants 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB.  Sample k (0-based) draws from a dedicated
// stream whose initial state is the splitmix64 output for input state
// seed XOR (k+1).
//
// A sampled polynomial enumerates the monomials in `vars` variables of
// total degree <= max_degree (exactly max_degree when homogeneous is
// set), in ascending degree and ascending lexicographic order of
// exponent vectors within a degree.  Each monomial consumes one draw:
// it is included when the low bit is set.  An included monomial
// consumes a second draw for its coefficient, 1 + (draw mod (p-1)).
// The matrix is sampled first, row-major; a check that needs a vector
// samples its entries next, from the same stream.
struct SweepConfig {
    std::string theorem_id;
    std::size_t rows = 2;
    std::size_t cols = 1;
    std::int64_t characteristic = 5;
    std::size_t max_degree = 1;
    bool homogeneous = true;
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    std::size_t vars = 3;
    // Minor index for bruns/macaulay_ee (defaults: min(rows, cols) and
    // min(rows, cols+1)); Fitting index for kwiecinski flavors
    // (default: rows).
    std::optional<std::size_t> param;
    std::optional<ResourceLimits> limits;
};

struct SweepRecord {
    std::size_t sample_index = 0;
    // Absent when the sample aborted before producing a bound.
    std::optional<BoundReport> report;
    // "", "hypothesis_violated", or "resource_limited".
    std::string failure;
};

struct SweepViolation {
    std::size_t sample_index = 0;
    // Session-format text reproducing the sample.
    std::string reproduction;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    // Set when a sample with fully verified hypotheses failed its
    // bound; the sweep stops at that sample.
    std::optional<SweepViolation> violation;
    std::size_t holds_count = 0;
    std::size_t vacuous_count = 0;
    std::size_t hypothesis_unverified_count = 0;
    std::size_t hypothesis_violated_count = 0;
    std::size_t resource_limited_count = 0;
    // slack -> count over non-vacuous completed samples.
    std::map<long, std::size_t> slack_histogram;
    // One row per record, exact header:
    // sample_index,rows,cols,char,theorem,lhs,rhs,slack,holds,vacuous,exactness,hypotheses_status,seed
    std::string csv;
};

// Samples sequentially (byte-identical CSV for identical config) and
// runs the configured check per sample.  Supported theorem_ids:
// lemma_1_1, gpit, macaulay_ee, bruns, row_ideal_equidim, kwiecinski,
// kwiecinski_refined, huneke_rossi.  Throws ConfigError on invalid
// configuration.
SweepResult run_sweep(const SweepConfig& config);

} // namespace gh

#endif
