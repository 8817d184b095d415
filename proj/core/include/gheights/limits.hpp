// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_LIMITS_HPP
#define GHEIGHTS_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace gh {

// Process-wide caps on basis computations.  Exceeding any cap raises
// ResourceLimitError; results produced under the caps are exact.
struct ResourceLimits {
    std::size_t max_pairs = 50000;  // S-pairs processed per basis run
    std::uint64_t max_degree = 60;  // total degree of any intermediate element
    std::size_t max_basis = 5000;   // basis elements per run
};

const ResourceLimits& resource_limits();
void set_resource_limits(const ResourceLimits& limits);

// Restores the previous limits on destruction.  Test scaffolding.
class ScopedResourceLimits {
public:
    explicit ScopedResourceLimits(const ResourceLimits& limits);
    ~ScopedResourceLimits();
    ScopedResourceLimits(const ScopedResourceLimits&) = delete;
    ScopedResourceLimits& operator=(const ScopedResourceLimits&) = delete;

private:
    ResourceLimits saved_;
};

} // namespace gh

#endif
