// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_RENDER_HPP
#define GHEIGHTS_RENDER_HPP

#include <string>
#include <vector>

#include "gheights/dimension.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/polynomial.hpp"
#include "gheights/report.hpp"
#include "gheights/sweep.hpp"

namespace gh {

// Human-readable renderings.  Every polynomial is printed in canonical
// form, so printed output re-parses to the identical object.

std::string render_report(const BoundReport& r);
// "dim {d}, height {h}, witness {v1, v2}"
std::string render_dim(const DimensionResult& d);
// "height {h}, dim {d}"
std::string render_height(const DimensionResult& d);
std::string render_poly_list(const std::string& heading, const std::vector<Polynomial>& ps);
std::string render_matrix(const std::string& heading, const PolyMatrix& A);
std::string render_sym(const SymPresentation& S);
std::string render_order_ideal(const OrderIdealResult& r);
std::string render_sweep_summary(const SweepConfig& config, const SweepResult& r);

// JSON renderings of the same content, serialized documents with keys
// in sorted order (deterministic byte-for-byte given equal inputs).

std::string json_report(const BoundReport& r);
std::string json_dimension(const DimensionResult& d);
std::string json_poly_list(const std::string& key, const std::vector<Polynomial>& ps);
std::string json_matrix(const PolyMatrix& A);
std::string json_sym(const SymPresentation& S);
std::string json_order_ideal(const OrderIdealResult& r);
std::string json_sweep(const SweepConfig& config, const SweepResult& r);

} // namespace gh

#endif
