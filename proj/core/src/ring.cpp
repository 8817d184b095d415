// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/ring.hpp"

#include <cctype>
#include <unordered_set>

#include "gheights/errors.hpp"

namespace gh {

bool PolyRing::valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

RingPtr PolyRing::create(std::vector<std::string> vars, CoefficientField field,
                         MonomialOrder order) {
    if (vars.size() > 64)
        throw ResourceLimitError("rings are capped at 64 variables");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars) {
        if (!valid_identifier(v))
            throw InvalidInputError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw DuplicateVariableError("duplicate variable name '" + v + "'");
    }
    if (order.kind == MonomialOrder::Kind::block && order.block_split > vars.size())
        throw InvalidInputError("block split exceeds variable count");
    return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool PolyRing::same(const PolyRing& other) const {
    if (this == &other) return true;
    return vars_ == other.vars_ && field_ == other.field_ && order_ == other.order_;
}

std::string PolyRing::describe() const {
    std::string s;
    if (field_.kind() == CoefficientField::Kind::rationals)
        s = "Q[";
    else
        s = "F" + std::to_string(field_.characteristic()) + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "] " + order_.name();
    return s;
}

void require_same_ring(const PolyRing& a, const PolyRing& b, const char* where) {
    if (!a.same(b))
        throw RingMismatchError(std::string(where) + ": operands live in different rings (" +
                                a.describe() + " vs " + b.describe() + ")");
}

} // namespace gh
