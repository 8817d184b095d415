// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gheights/checks.hpp"
#include "gheights/dimension.hpp"
#include "gheights/errors.hpp"
#include "gheights/free_module.hpp"
#include "gheights/ideal.hpp"
#include "gheights/limits.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/render.hpp"
#include "gheights/report.hpp"
#include "gheights/session.hpp"
#include "gheights/sweep.hpp"

namespace gh::cli {
namespace {

// Option state of the `check` subcommand.
struct CheckArgs {
    std::string session;
    std::string theorem;
    std::string matrix_name;
    std::string vector_name;
    std::string cert_name;
    std::string ideal_name;
    std::string ideal2_name;
    std::vector<std::string> prime_names;
    std::size_t index = 0; // --i
    std::size_t minor = 0; // --t
    bool have_index = false;
    bool have_minor = false;
    bool json = false;
};

const PolyMatrix& need_matrix(const SessionDocument& doc, const CheckArgs& a) {
    if (a.matrix_name.empty())
        throw ConfigError("check " + a.theorem + " requires --matrix");
    return doc.matrix(a.matrix_name);
}

const FreeModuleElement& need_vector(const SessionDocument& doc, const CheckArgs& a) {
    if (a.vector_name.empty())
        throw ConfigError("check " + a.theorem + " requires --vector");
    return doc.vector(a.vector_name);
}

std::size_t need_index(const CheckArgs& a) {
    if (!a.have_index) throw ConfigError("check " + a.theorem + " requires --i");
    return a.index;
}

std::size_t need_minor(const CheckArgs& a) {
    if (!a.have_minor) throw ConfigError("check " + a.theorem + " requires --t");
    return a.minor;
}

const Ideal& need_ideal(const SessionDocument& doc, const std::string& name,
                        const CheckArgs& a, const char* flag) {
    if (name.empty())
        throw ConfigError("check " + a.theorem + " requires " + flag);
    return doc.ideal(name);
}

// Supplied certificate, or the verified one computed from the
// presentation when the flag is omitted.
std::optional<EquidimCertificate> resolve_certificate(const SessionDocument& doc,
                                                      const CheckArgs& a, const PolyMatrix& A) {
    if (!a.cert_name.empty()) return doc.certificate(a.cert_name);
    return equidim_certificate(sym_presentation(A));
}

std::optional<PrimeWitness> single_prime(const SessionDocument& doc, const CheckArgs& a) {
    if (a.prime_names.empty()) return std::nullopt;
    if (a.prime_names.size() > 1)
        throw ConfigError("check " + a.theorem + " takes at most one --prime");
    return doc.prime(a.prime_names.front());
}

BoundReport dispatch_check(const SessionDocument& doc, const CheckArgs& a) {
    if (a.theorem == "lemma_1_1") return check_lemma_1_1(need_matrix(doc, a), need_vector(doc, a));
    if (a.theorem == "gpit") return check_gpit(need_matrix(doc, a), need_vector(doc, a));
    if (a.theorem == "macaulay_ee")
        return check_macaulay_ee(need_matrix(doc, a), need_vector(doc, a), need_minor(a));
    if (a.theorem == "bruns") return check_bruns(need_matrix(doc, a), need_minor(a));
    if (a.theorem == "row_ideal_equidim") {
        const PolyMatrix& A = need_matrix(doc, a);
        auto q = single_prime(doc, a);
        return check_row_ideal_equidim(A, need_vector(doc, a), resolve_certificate(doc, a, A),
                                       q ? *q : PrimeWitness::zero_ideal(A.ring()));
    }
    if (a.theorem == "kwiecinski") {
        const PolyMatrix& A = need_matrix(doc, a);
        return check_kwiecinski(A, need_index(a), resolve_certificate(doc, a, A));
    }
    if (a.theorem == "kwiecinski_refined") {
        const PolyMatrix& A = need_matrix(doc, a);
        return check_kwiecinski_refined(A, need_index(a), resolve_certificate(doc, a, A),
                                        single_prime(doc, a));
    }
    if (a.theorem == "huneke_rossi") {
        std::vector<PrimeWitness> witnesses;
        for (const auto& name : a.prime_names) witnesses.push_back(doc.prime(name));
        return check_huneke_rossi(need_matrix(doc, a), witnesses);
    }
    if (a.theorem == "serre_subadditivity")
        return check_serre_subadditivity(need_ideal(doc, a.ideal_name, a, "--ideal"),
                                         need_ideal(doc, a.ideal2_name, a, "--ideal2"));
    throw ConfigError("unknown theorem '" + a.theorem +
                      "'; expected one of lemma_1_1, gpit, macaulay_ee, bruns, "
                      "row_ideal_equidim, kwiecinski, kwiecinski_refined, huneke_rossi, "
                      "serre_subadditivity");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gheights: exact height bounds for determinantal and order ideals"};
    app.require_subcommand(1);

    ResourceLimits limits = resource_limits();
    app.add_option("--max-pairs", limits.max_pairs, "cap on S-pairs per basis computation")
        ->envname("GH_MAX_PAIRS");
    app.add_option("--max-degree", limits.max_degree,
                   "cap on the total degree of intermediate basis elements")
        ->envname("GH_MAX_DEGREE");
    app.add_option("--max-basis", limits.max_basis, "cap on basis size per computation")
        ->envname("GH_MAX_BASIS");

    bool bound_failed = false;
    auto apply_limits = [&limits] { set_resource_limits(limits); };

    struct {
        std::string session, name;
        bool json = false;
    } gb, dim, height;
    struct {
        std::string session, name;
        std::size_t t = 0;
        bool json = false;
    } minors_args, fitting_args;
    struct {
        std::string session, matrix, vec;
        bool json = false;
    } rowideal_args, orderideal_args;
    struct {
        std::string session, name;
        bool json = false;
    } kernel_args, sym_args;
    CheckArgs check_args;
    SweepConfig sweep_config;
    struct {
        std::size_t param = 0;
        std::string out_path;
        bool json = false;
    } sweep_extra;

    auto add_session = [](CLI::App* sub, std::string& slot) {
        sub->add_option("session", slot, "session file defining the named objects")->required();
    };

    CLI::App* gb_cmd = app.add_subcommand("gb", "reduced basis of a named ideal");
    add_session(gb_cmd, gb.session);
    gb_cmd->add_option("name", gb.name, "ideal name")->required();
    gb_cmd->add_flag("--json", gb.json, "machine-readable output");
    gb_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(gb.session);
        const std::vector<Polynomial>& basis = doc.ideal(gb.name).basis();
        out << (gb.json ? json_poly_list("basis", basis)
                        : render_poly_list("reduced basis of " + gb.name, basis));
    });

    CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension of R modulo a named ideal");
    add_session(dim_cmd, dim.session);
    dim_cmd->add_option("name", dim.name, "ideal name")->required();
    dim_cmd->add_flag("--json", dim.json, "machine-readable output");
    dim_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(dim.session);
        DimensionResult d = krull_dim(doc.ideal(dim.name));
        out << (dim.json ? json_dimension(d) : render_dim(d));
    });

    CLI::App* height_cmd = app.add_subcommand("height", "height of a named ideal");
    add_session(height_cmd, height.session);
    height_cmd->add_option("name", height.name, "ideal name")->required();
    height_cmd->add_flag("--json", height.json, "machine-readable output");
    height_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(height.session);
        DimensionResult d = krull_dim(doc.ideal(height.name));
        out << (height.json ? json_dimension(d) : render_height(d));
    });

    CLI::App* minors_cmd = app.add_subcommand("minors", "all t-by-t minors of a named matrix");
    add_session(minors_cmd, minors_args.session);
    minors_cmd->add_option("matrix", minors_args.name, "matrix name")->required();
    minors_cmd->add_option("t", minors_args.t, "minor size")->required();
    minors_cmd->add_flag("--json", minors_args.json, "machine-readable output");
    minors_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(minors_args.session);
        std::vector<Polynomial> ms = minors(doc.matrix(minors_args.name), minors_args.t);
        std::ostringstream heading;
        heading << "minors t=" << minors_args.t << " of " << minors_args.name;
        out << (minors_args.json ? json_poly_list("minors", ms)
                                 : render_poly_list(heading.str(), ms));
    });

    CLI::App* fitting_cmd = app.add_subcommand("fitting", "Fitting ideal of a named matrix");
    add_session(fitting_cmd, fitting_args.session);
    fitting_cmd->add_option("matrix", fitting_args.name, "presentation matrix name")->required();
    fitting_cmd->add_option("i", fitting_args.t, "Fitting index")->required();
    fitting_cmd->add_flag("--json", fitting_args.json, "machine-readable output");
    fitting_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(fitting_args.session);
        Ideal F = fitting_ideal(doc.matrix(fitting_args.name), fitting_args.t);
        std::ostringstream heading;
        heading << "fitting ideal i=" << fitting_args.t << " of " << fitting_args.name;
        out << (fitting_args.json ? json_poly_list("generators", F.generators())
                                  : render_poly_list(heading.str(), F.generators()));
    });

    CLI::App* rowideal_cmd =
        app.add_subcommand("rowideal", "generalized row ideal of a matrix at a vector");
    add_session(rowideal_cmd, rowideal_args.session);
    rowideal_cmd->add_option("matrix", rowideal_args.matrix, "matrix name")->required();
    rowideal_cmd->add_option("vector", rowideal_args.vec, "row-vector name")->required();
    rowideal_cmd->add_flag("--json", rowideal_args.json, "machine-readable output");
    rowideal_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(rowideal_args.session);
        Ideal R = row_ideal(doc.matrix(rowideal_args.matrix), doc.vector(rowideal_args.vec));
        out << (rowideal_args.json
                    ? json_poly_list("generators", R.generators())
                    : render_poly_list("row ideal of " + rowideal_args.matrix + " at " +
                                           rowideal_args.vec,
                                       R.generators()));
    });

    CLI::App* orderideal_cmd =
        app.add_subcommand("orderideal", "order ideal of an element of coker(psi)");
    add_session(orderideal_cmd, orderideal_args.session);
    orderideal_cmd->add_option("matrix", orderideal_args.matrix, "presentation matrix name")
        ->required();
    orderideal_cmd->add_option("vector", orderideal_args.vec, "representative vector name")
        ->required();
    orderideal_cmd->add_flag("--json", orderideal_args.json, "machine-readable output");
    orderideal_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(orderideal_args.session);
        OrderIdealResult r =
            order_ideal(doc.matrix(orderideal_args.matrix), doc.vector(orderideal_args.vec));
        out << (orderideal_args.json ? json_order_ideal(r) : render_order_ideal(r));
    });

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "syzygies of the columns of a matrix");
    add_session(kernel_cmd, kernel_args.session);
    kernel_cmd->add_option("matrix", kernel_args.name, "matrix name")->required();
    kernel_cmd->add_flag("--json", kernel_args.json, "machine-readable output");
    kernel_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(kernel_args.session);
        PolyMatrix K = kernel(doc.matrix(kernel_args.name));
        out << (kernel_args.json ? json_matrix(K)
                                 : render_matrix("kernel of " + kernel_args.name, K));
    });

    CLI::App* sym_cmd =
        app.add_subcommand("sym", "symmetric-algebra presentation of coker of a matrix");
    add_session(sym_cmd, sym_args.session);
    sym_cmd->add_option("matrix", sym_args.name, "presentation matrix name")->required();
    sym_cmd->add_flag("--json", sym_args.json, "machine-readable output");
    sym_cmd->callback([&] {
        apply_limits();
        SessionDocument doc = parse_session_file(sym_args.session);
        SymPresentation S = sym_presentation(doc.matrix(sym_args.name));
        out << (sym_args.json ? json_sym(S) : render_sym(S));
    });

    CLI::App* check_cmd = app.add_subcommand("check", "run one bound check and report it");
    add_session(check_cmd, check_args.session);
    check_cmd
        ->add_option("theorem", check_args.theorem,
                     "one of: lemma_1_1, gpit, macaulay_ee, bruns, row_ideal_equidim, "
                     "kwiecinski, kwiecinski_refined, huneke_rossi, serre_subadditivity")
        ->required();
    check_cmd->add_option("--matrix", check_args.matrix_name, "matrix name (A or psi)");
    check_cmd->add_option("--vector", check_args.vector_name,
                          "vector name (b, x, or the extra column)");
    check_cmd->add_option("--i", check_args.index, "Fitting index (kwiecinski flavors)");
    check_cmd->add_option("--t", check_args.minor, "minor size (macaulay_ee, bruns)");
    check_cmd->add_option("--certificate", check_args.cert_name,
                          "equidimensionality certificate name; omitted: computed when the "
                          "defining ideal is a complete intersection");
    check_cmd->add_option("--prime", check_args.prime_names,
                          "prime witness name (repeatable for huneke_rossi)");
    check_cmd->add_option("--ideal", check_args.ideal_name, "first ideal (serre_subadditivity)");
    check_cmd->add_option("--ideal2", check_args.ideal2_name,
                          "second ideal (serre_subadditivity)");
    check_cmd->add_flag("--json", check_args.json, "machine-readable output");
    check_cmd->callback([&] {
        apply_limits();
        check_args.have_index = check_cmd->count("--i") > 0;
        check_args.have_minor = check_cmd->count("--t") > 0;
        SessionDocument doc = parse_session_file(check_args.session);
        BoundReport report = dispatch_check(doc, check_args);
        out << (check_args.json ? json_report(report) : render_report(report));
        if (!report.holds) bound_failed = true;
    });

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "random-instance sweep of one bound");
    sweep_cmd->add_option("--theorem", sweep_config.theorem_id, "bound to sweep")->required();
    sweep_cmd->add_option("--rows", sweep_config.rows, "matrix rows (default 2)");
    sweep_cmd->add_option("--cols", sweep_config.cols, "matrix cols (default 1)");
    sweep_cmd->add_option("--char", sweep_config.characteristic,
                          "prime field characteristic (default 5)");
    sweep_cmd->add_option("--max-deg", sweep_config.max_degree,
                          "maximal entry degree (default 1)");
    sweep_cmd->add_flag("--homogeneous,!--inhomogeneous", sweep_config.homogeneous,
                        "sample only the top degree (default on)");
    sweep_cmd->add_option("--samples", sweep_config.samples, "sample count (default 1)");
    sweep_cmd->add_option("--seed", sweep_config.seed, "PRNG seed (default 0)");
    sweep_cmd->add_option("--vars", sweep_config.vars, "ring variable count (default 3)");
    sweep_cmd->add_option("--param", sweep_extra.param,
                          "minor size or Fitting index; default depends on the theorem");
    sweep_cmd->add_option("--out", sweep_extra.out_path, "write the CSV to this file");
    sweep_cmd->add_flag("--json", sweep_extra.json,
                        "print one JSON document instead of CSV + summary");
    sweep_cmd->callback([&] {
        apply_limits();
        if (sweep_cmd->count("--param") > 0) sweep_config.param = sweep_extra.param;
        SweepResult result = run_sweep(sweep_config);
        if (!sweep_extra.out_path.empty()) {
            std::ofstream f(sweep_extra.out_path, std::ios::binary);
            if (!f) throw ConfigError("cannot write CSV to '" + sweep_extra.out_path + "'");
            f << result.csv;
        }
        if (sweep_extra.json) {
            out << json_sweep(sweep_config, result);
        } else if (!sweep_extra.out_path.empty()) {
            out << render_sweep_summary(sweep_config, result);
        } else {
            out << result.csv;
            err << render_sweep_summary(sweep_config, result);
        }
        if (result.violation) bound_failed = true;
    });

    try {
        // Entry limits are restored on every path; flag values apply
        // only inside this invocation.
        ScopedResourceLimits scope(resource_limits());
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisViolatedError& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return bound_failed ? 1 : 0;
}

} // namespace gh::cli
