// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/limits.hpp"

namespace gh {
namespace {

ResourceLimits& storage() {
    static ResourceLimits limits;
    return limits;
}

} // namespace

const ResourceLimits& resource_limits() { return storage(); }

void set_resource_limits(const ResourceLimits& limits) { storage() = limits; }

ScopedResourceLimits::ScopedResourceLimits(const ResourceLimits& limits) : saved_(storage()) {
    storage() = limits;
}

ScopedResourceLimits::~ScopedResourceLimits() { storage() = saved_; }

} // namespace gh
