// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/render.hpp"

#include <sstream>

#include <json.hpp>

namespace gh {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json poly_strings(const std::vector<Polynomial>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

json hypotheses_json(const std::vector<Hypothesis>& hs) {
    json arr = json::array();
    for (const auto& h : hs) arr.push_back({{"name", h.name}, {"status", to_string(h.status)}});
    return arr;
}

json matrix_json(const PolyMatrix& A) {
    json rows = json::array();
    for (std::size_t r = 0; r < A.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < A.cols(); ++c) row.push_back(A.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(rows)}};
}

json dimension_json(const DimensionResult& d) {
    return json{{"dim", d.dim}, {"height", d.height}, {"witness", d.witness_independent_set}};
}

json report_json(const BoundReport& r) {
    return json{{"theorem", r.theorem_id},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"slack", r.slack},
                {"holds", r.holds},
                {"vacuous", r.vacuous},
                {"exactness", to_string(r.exactness)},
                {"hypotheses", hypotheses_json(r.hypotheses)},
                {"notes", r.notes}};
}

json sweep_json(const SweepConfig& config, const SweepResult& r) {
    json cfg{{"theorem", config.theorem_id}, {"rows", config.rows},
             {"cols", config.cols},         {"char", config.characteristic},
             {"max_degree", config.max_degree}, {"homogeneous", config.homogeneous},
             {"samples", config.samples},   {"seed", config.seed},
             {"vars", config.vars}};
    if (config.param) cfg["param"] = *config.param;

    json records = json::array();
    for (const auto& rec : r.records) {
        json row{{"sample_index", rec.sample_index}};
        if (rec.report) {
            row["report"] = report_json(*rec.report);
        } else {
            row["failure"] = rec.failure;
        }
        records.push_back(std::move(row));
    }

    json hist = json::object();
    for (const auto& [slack, count] : r.slack_histogram) hist[std::to_string(slack)] = count;

    json doc{{"config", std::move(cfg)},
             {"records", std::move(records)},
             {"holds_count", r.holds_count},
             {"vacuous_count", r.vacuous_count},
             {"hypothesis_unverified_count", r.hypothesis_unverified_count},
             {"hypothesis_violated_count", r.hypothesis_violated_count},
             {"resource_limited_count", r.resource_limited_count},
             {"slack_histogram", std::move(hist)}};
    if (r.violation)
        doc["violation"] = {{"sample_index", r.violation->sample_index},
                            {"reproduction", r.violation->reproduction}};
    else
        doc["violation"] = nullptr;
    return doc;
}

void append_poly_lines(std::ostream& os, const std::vector<Polynomial>& ps) {
    for (const auto& p : ps) os << "  " << p.to_string() << "\n";
}

std::string witness_braces(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out + "}";
}

} // namespace

std::string render_report(const BoundReport& r) {
    std::ostringstream os;
    os << "theorem " << r.theorem_id << "\n";
    os << "lhs " << r.lhs << (r.lhs <= r.rhs ? " <= rhs " : " > rhs ") << r.rhs << ", "
       << (r.holds ? (r.vacuous ? "holds (vacuous)" : "holds") : "VIOLATED") << ", slack "
       << r.slack << ", " << to_string(r.exactness) << "\n";
    for (const auto& h : r.hypotheses)
        os << "hypothesis " << h.name << ": " << to_string(h.status) << "\n";
    for (const auto& n : r.notes) os << "note " << n << "\n";
    return os.str();
}

std::string render_dim(const DimensionResult& d) {
    std::ostringstream os;
    os << "dim " << d.dim << ", height " << d.height << ", witness "
       << witness_braces(d.witness_independent_set) << "\n";
    return os.str();
}

std::string render_height(const DimensionResult& d) {
    std::ostringstream os;
    os << "height " << d.height << ", dim " << d.dim << "\n";
    return os.str();
}

std::string render_poly_list(const std::string& heading, const std::vector<Polynomial>& ps) {
    std::ostringstream os;
    os << heading << " (" << ps.size() << (ps.size() == 1 ? " element" : " elements") << "):\n";
    append_poly_lines(os, ps);
    return os.str();
}

std::string render_matrix(const std::string& heading, const PolyMatrix& A) {
    std::ostringstream os;
    os << heading << " (" << A.rows() << "x" << A.cols() << "):\n";
    for (std::size_t r = 0; r < A.rows(); ++r) {
        os << "  [";
        for (std::size_t c = 0; c < A.cols(); ++c) {
            if (c) os << ", ";
            os << A.at(r, c).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

std::string render_sym(const SymPresentation& S) {
    std::ostringstream os;
    os << "sym presentation: " << S.extension.extended->describe() << "\n";
    os << "generator variables: ";
    for (std::size_t i = 0; i < S.n; ++i) {
        if (i) os << ", ";
        os << S.extension.extended->variable(i);
    }
    os << "\n";
    os << render_poly_list("defining ideal", S.defining_ideal.generators());
    return os.str();
}

std::string render_order_ideal(const OrderIdealResult& r) {
    std::ostringstream os;
    os << render_poly_list("order ideal", r.ideal.generators());
    os << "x in m*N: " << (r.x_in_max_ideal ? "true" : "false") << "\n";
    return os.str();
}

std::string render_sweep_summary(const SweepConfig& config, const SweepResult& r) {
    std::ostringstream os;
    os << "sweep theorem=" << config.theorem_id << " rows=" << config.rows
       << " cols=" << config.cols << " char=" << config.characteristic
       << " max_degree=" << config.max_degree
       << " homogeneous=" << (config.homogeneous ? "true" : "false")
       << " samples=" << config.samples << " seed=" << config.seed << " vars=" << config.vars;
    if (config.param) os << " param=" << *config.param;
    os << "\n";
    os << "completed " << r.records.size() << ": holds " << r.holds_count << ", vacuous "
       << r.vacuous_count << ", hypothesis-unverified " << r.hypothesis_unverified_count
       << ", hypothesis-violated " << r.hypothesis_violated_count << ", resource-limited "
       << r.resource_limited_count << "\n";
    os << "slack histogram:";
    if (r.slack_histogram.empty()) os << " (empty)";
    for (const auto& [slack, count] : r.slack_histogram) os << " " << slack << ":" << count;
    os << "\n";
    if (r.violation) {
        os << "VIOLATION at sample " << r.violation->sample_index << "; reproduction:\n";
        os << r.violation->reproduction;
    } else {
        os << "violations: none\n";
    }
    return os.str();
}

std::string json_report(const BoundReport& r) { return dump(report_json(r)); }

std::string json_dimension(const DimensionResult& d) { return dump(dimension_json(d)); }

std::string json_poly_list(const std::string& key, const std::vector<Polynomial>& ps) {
    return dump(json{{key, poly_strings(ps)}});
}

std::string json_matrix(const PolyMatrix& A) { return dump(matrix_json(A)); }

std::string json_sym(const SymPresentation& S) {
    std::vector<std::string> tvars;
    for (std::size_t i = 0; i < S.n; ++i) tvars.push_back(S.extension.extended->variable(i));
    return dump(json{{"ring_vars", S.extension.extended->variables()},
                     {"generator_vars", tvars},
                     {"defining_ideal", poly_strings(S.defining_ideal.generators())}});
}

std::string json_order_ideal(const OrderIdealResult& r) {
    return dump(json{{"generators", poly_strings(r.ideal.generators())},
                     {"x_in_max_ideal", r.x_in_max_ideal}});
}

std::string json_sweep(const SweepConfig& config, const SweepResult& r) {
    return dump(sweep_json(config, r));
}

} // namespace gh
