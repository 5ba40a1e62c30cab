#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "proglab/behrend.hpp"
#include "proglab/bound_solver.hpp"
#include "proglab/codim.hpp"
#include "proglab/entropy.hpp"
#include "proglab/errors.hpp"
#include "proglab/group.hpp"
#include "proglab/group_ring.hpp"
#include "proglab/numeric.hpp"
#include "proglab/oracle.hpp"
#include "proglab/regularize.hpp"
#include "proglab/setfile.hpp"

namespace {

using nlohmann::json;
using namespace proglab;

constexpr int kSchemaVersion = 1;

// Worker cap honored by any parallel section; the current implementation is
// single-threaded, so this is accepted and reported but not yet consumed.
unsigned worker_cap() {
    if (const char* env = std::getenv("PROGLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

json base_object() { return json{{"schema_version", kSchemaVersion}}; }

void emit(const json& out, const std::string& summary) {
    std::cout << out.dump(2) << "\n";
    if (!summary.empty()) std::cerr << summary << "\n";
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(parse_rational(tok));
    }
    return out;
}

json witness_json(const std::vector<GroupElement>& elements) {
    json arr = json::array();
    for (const auto& g : elements) arr.push_back(g.residues);
    return arr;
}

json solver_report_json(const SolverReport& report, bool full) {
    json out = base_object();
    out["theta1"] = report.theta1;
    out["rho1"] = report.rho1;
    out["bound_c8"] = report.bound_c8;
    out["residuals"] = report.residuals;
    if (full) {
        out["x0"] = report.x0;
        out["gamma_clp"] = report.gamma_clp;
        out["kappa4"] = report.kappa4;
        out["constants"] = {{"bound_c4_rk", report.constants.bound_c4_rk},
                            {"bound_c8_rk", report.constants.bound_c8_rk},
                            {"two_kappa4", report.constants.two_kappa4}};
        out["second_root_in_extension"] = report.second_root_in_extension;
    }
    return out;
}

int run_bounds() {
    const SolverReport report = headline_constants();
    std::ostringstream summary;
    summary << "bound " << report.bound_c8 << " (theta1 " << report.theta1 << ", rho1 "
            << report.rho1 << "), kappa4 " << report.kappa4;
    emit(solver_report_json(report, true), summary.str());
    return 0;
}

int run_solve_c8(double tol) {
    const SolverReport report = solve_c8_system(tol);
    json out = solver_report_json(report, false);
    out["bound"] = report.bound_c8;
    std::ostringstream summary;
    summary << "theta1 " << report.theta1 << ", rho1 " << report.rho1 << ", bound "
            << report.bound_c8;
    emit(out, summary.str());
    return 0;
}

int run_entropy(int k, double theta) {
    const EntropyPoint point = entropy_h_detail(k, theta);
    json out = base_object();
    out["k"] = k;
    out["theta"] = theta;
    out["value"] = point.value;
    if (std::isfinite(point.argmin_x)) {
        out["argmin_x"] = point.argmin_x;
    } else {
        out["argmin_x"] = "inf";
    }
    emit(out, "");
    return 0;
}

int run_kappa(int k) {
    const EntropyPoint point = kappa_detail(k);
    json out = base_object();
    out["k"] = k;
    out["value"] = point.value;
    out["argmin_x"] = point.argmin_x;
    emit(out, "");
    return 0;
}

int run_codim(int n, int k, double theta, const std::string& weights_text) {
    DegreeCountQuery q;
    q.degrees_per_var.assign(static_cast<std::size_t>(n), static_cast<std::uint32_t>(k));
    Rational deg_max = 0;
    if (weights_text.empty()) {
        q.weights.clear();
        deg_max = Rational(static_cast<long>(n) * (k - 1));
    } else {
        q.weights = parse_rational_list(weights_text);
        if (q.weights.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("codim: need exactly n weights");
        }
        for (const auto& w : q.weights) deg_max += w * (k - 1);
    }
    q.cap = rational_from_double(theta) * deg_max;
    const BigInt exact = count_monomials(q);
    const ChernoffCodimBound bound = chernoff_codim_bound(n, k, theta);

    json out = base_object();
    out["n"] = n;
    out["k"] = k;
    out["theta"] = theta;
    out["exact"] = exact.str();
    out["log2_exact"] = exact > 0 ? log2_big(exact) : 0.0;
    out["log2_bound"] = bound.log2_value;
    std::ostringstream summary;
    summary << "exact " << exact << ", log2 bound " << bound.log2_value;
    emit(out, summary.str());
    return 0;
}

int run_ring_check(const std::string& group, const std::string& thetas_text,
                   const std::string& weights_text, int samples, std::uint64_t seed) {
    const GroupSpec spec = GroupSpec::parse(group);
    const std::vector<double> thetas = parse_double_list(thetas_text);
    if (thetas.empty()) throw std::invalid_argument("ring-check: need at least one theta");
    std::vector<double> weights =
        weights_text.empty() ? std::vector<double>{} : parse_double_list(weights_text);

    std::vector<SubspaceSpec> subspaces;
    double theta_sum = 0.0;
    for (double theta : thetas) {
        subspaces.push_back(subspace_X(spec, theta, weights));
        theta_sum += theta;
    }
    const ZeroProductReport report = verify_zero_product(spec, subspaces, samples, seed);

    json out = base_object();
    out["group"] = spec.str();
    out["thetas"] = thetas;
    out["theta_sum"] = theta_sum;
    out["samples"] = report.samples;
    out["all_zero"] = report.all_zero;
    if (report.counterexample) {
        json factor_supports = json::array();
        for (const auto& f : report.counterexample->factors) {
            factor_supports.push_back(f.support_size());
        }
        out["counterexample"] = {{"sample_index", report.counterexample->sample_index},
                                 {"factor_supports", factor_supports},
                                 {"product_support", report.counterexample->product.support_size()}};
    } else {
        out["counterexample"] = nullptr;
    }
    std::ostringstream summary;
    summary << "theta sum " << theta_sum << ": "
            << (report.all_zero ? "all products vanished" : "nonzero product found");
    emit(out, summary.str());
    return 0;
}

int run_regularize(const std::string& input, int level) {
    const SetFile file = read_set_file_path(input);
    const WeightedPartition partition = partition_by_power(file.group, file.elements, level);
    const RegularSubset subset =
        level == 2 ? extract_super_regular(partition) : extract_regular(partition);

    const Rational total = partition.total_weight();
    json out = base_object();
    out["group"] = file.group.str();
    out["level"] = level;
    out["k"] = subset.k;
    if (subset.k_prime) {
        out["k_prime"] = *subset.k_prime;
    } else {
        out["k_prime"] = nullptr;
    }
    out["size"] = subset.ids.size();
    out["weight"] = to_double(subset.weight);
    out["weight_exact"] = subset.weight.str();
    out["ratio"] = total == 0 ? 0.0 : to_double(subset.weight / total);
    out["m"] = partition.max_class_size();
    if (level == 2) out["m_prime"] = partition.max_classes_per_superclass();
    std::ostringstream summary;
    summary << "selected " << subset.ids.size() << " of " << file.elements.size()
            << " items, k=" << subset.k;
    emit(out, summary.str());
    return 0;
}

int run_behrend(int modulus, int dim, std::optional<std::int64_t> radius2,
                const std::string& emit_path, bool verify, bool count_only,
                const std::string& growth_range) {
    if (!growth_range.empty()) {
        const auto colon = growth_range.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("behrend: --growth expects LO:HI");
        }
        const int lo = std::stoi(growth_range.substr(0, colon));
        const int hi = std::stoi(growth_range.substr(colon + 1));
        if (lo < 1 || hi < lo) throw std::invalid_argument("behrend: bad growth range");
        std::vector<int> dims;
        for (int n = lo; n <= hi; ++n) dims.push_back(n);
        std::cout << "n,radius2,count,ratio\n";
        for (const auto& row : growth_report(dims, modulus)) {
            std::cout << row.n << ',' << row.radius2 << ',' << row.count.str() << ',' << row.ratio
                      << "\n";
        }
        std::cerr << "growth table for modulus " << modulus << ", n in [" << lo << "," << hi
                  << "]\n";
        return 0;
    }

    const std::int64_t r2 = radius2 ? *radius2 : default_radius2(dim, modulus);
    const BigInt count = sphere_count({dim, modulus, r2});

    json out = base_object();
    out["modulus"] = modulus;
    out["dim"] = dim;
    out["radius2"] = r2;
    out["count"] = count.str();

    std::ostringstream summary;
    summary << "sphere in (Z/" << modulus << ")^" << dim << " at radius2 " << r2 << ": " << count
            << " points";
    if (!count_only) {
        const std::vector<GroupElement> points = build_behrend_set(dim, modulus, r2);
        out["size"] = points.size();
        if (verify) {
            std::vector<std::uint32_t> moduli(static_cast<std::size_t>(dim),
                                              static_cast<std::uint32_t>(modulus));
            const GroupSpec spec{moduli};
            out["ap_free"] = verify_ap_free(spec, points).free;
        }
        if (!emit_path.empty()) {
            std::vector<std::uint32_t> moduli(static_cast<std::size_t>(dim),
                                              static_cast<std::uint32_t>(modulus));
            write_set_file_path(emit_path, GroupSpec{moduli}, points);
            out["emitted"] = emit_path;
            summary << ", written to " << emit_path;
        }
    }
    emit(out, summary.str());
    return 0;
}

int run_oracle(const std::string& group, bool greedy, std::int64_t budget_nodes, int restarts,
               std::uint64_t seed, bool forbid_semitrivial, const std::string& verify_file) {
    if (!verify_file.empty()) {
        const SetFile file = read_set_file_path(verify_file);
        const ApFreeReport report = verify_ap_free(file.group, file.elements);
        json out = base_object();
        out["group"] = file.group.str();
        out["size"] = file.elements.size();
        out["ap_free"] = report.free;
        if (report.witness) {
            out["witness"] = witness_json({(*report.witness)[0], (*report.witness)[1],
                                           (*report.witness)[2]});
        }
        emit(out, report.free ? "progression-free" : "progression found");
        return 0;
    }

    const GroupSpec spec = GroupSpec::parse(group);
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    budget.restarts = restarts;
    budget.seed = seed;
    const R3Result result = greedy ? r3_greedy(spec, budget, forbid_semitrivial)
                                   : r3_exact(spec, budget, forbid_semitrivial);

    json out = base_object();
    out["group"] = spec.str();
    out["size"] = result.size;
    out["exact"] = result.exact;
    out["upper"] = result.upper;
    out["nodes"] = result.nodes;
    out["witness"] = witness_json(result.witness);
    std::ostringstream summary;
    summary << (result.exact ? "r3 = " : "r3 >= ") << result.size << " in " << spec.str();
    emit(out, summary.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"progression-free set laboratory"};
    app.require_subcommand(1);
    (void)worker_cap();

    auto* bounds_cmd = app.add_subcommand("bounds", "all headline constants");

    double tol = 1e-12;
    auto* solve_cmd = app.add_subcommand("solve-c8", "solve the coupled constraint system");
    solve_cmd->add_option("--tol", tol, "bisection tolerance on theta");

    int entropy_k = 2;
    double entropy_theta = 0.5;
    auto* entropy_cmd = app.add_subcommand("entropy", "entropy exponent H_k(theta)");
    entropy_cmd->add_option("--k", entropy_k, "alphabet size")->required();
    entropy_cmd->add_option("--theta", entropy_theta, "argument in [0,1]")->required();

    int kappa_k = 4;
    auto* kappa_cmd = app.add_subcommand("kappa", "kappa_k = 2^{H_k(1/3)}");
    kappa_cmd->add_option("--k", kappa_k, "alphabet size")->required();

    int codim_n = 1, codim_k = 4;
    double codim_theta = 0.5;
    std::string codim_weights;
    auto* codim_cmd = app.add_subcommand("codim", "exact low-degree monomial count vs bound");
    codim_cmd->add_option("--n", codim_n, "number of variables")->required();
    codim_cmd->add_option("--k", codim_k, "exponent range per variable")->required();
    codim_cmd->add_option("--theta", codim_theta, "degree fraction")->required();
    codim_cmd->add_option("--weights", codim_weights, "comma-separated rational weights");

    std::string ring_group = "4^2", ring_thetas, ring_weights;
    int ring_samples = 100;
    std::uint64_t ring_seed = 1;
    auto* ring_cmd = app.add_subcommand("ring-check", "randomized zero-product verification");
    ring_cmd->add_option("--group", ring_group, "group spec, e.g. 4^2 or 4x8")->required();
    ring_cmd->add_option("--thetas", ring_thetas, "comma-separated thresholds")->required();
    ring_cmd->add_option("--weights", ring_weights, "comma-separated weights");
    ring_cmd->add_option("--samples", ring_samples, "samples per check")
        ->check(CLI::PositiveNumber);
    ring_cmd->add_option("--seed", ring_seed, "random seed");

    std::string reg_input;
    int reg_level = 1;
    auto* reg_cmd = app.add_subcommand("regularize", "extract a regular subset from a set file");
    reg_cmd->add_option("--input", reg_input, "set file path")->required();
    reg_cmd->add_option("--level", reg_level, "1 = classes, 2 = classes and superclasses")
        ->check(CLI::IsMember({1, 2}));

    int beh_modulus = 8, beh_dim = 1;
    std::int64_t beh_radius2 = -1;
    std::string beh_emit, beh_growth;
    bool beh_verify = false, beh_count_only = false;
    auto* beh_cmd = app.add_subcommand("behrend", "sphere constructions and counts");
    beh_cmd->add_option("--modulus", beh_modulus, "4 or 8")->required()
        ->check(CLI::IsMember({4, 8}));
    beh_cmd->add_option("--dim", beh_dim, "dimension n")->check(CLI::PositiveNumber);
    beh_cmd->add_option("--radius2", beh_radius2, "squared radius override")
        ->check(CLI::NonNegativeNumber);
    beh_cmd->add_option("--emit", beh_emit, "write the set to this file");
    beh_cmd->add_flag("--verify", beh_verify, "exhaustively verify progression-freeness");
    beh_cmd->add_flag("--count-only", beh_count_only, "skip enumeration, report the count");
    beh_cmd->add_option("--growth", beh_growth, "emit a CSV growth table for n in LO:HI");

    std::string oracle_group, oracle_verify_file;
    bool oracle_exact = false, oracle_greedy = false, oracle_semitrivial = false;
    std::int64_t oracle_nodes = 20'000'000;
    int oracle_restarts = 64;
    std::uint64_t oracle_seed = 1;
    auto* oracle_cmd = app.add_subcommand("oracle", "largest progression-free subset search");
    oracle_cmd->add_option("--group", oracle_group, "group spec");
    oracle_cmd->add_flag("--exact", oracle_exact, "branch-and-bound (default)");
    oracle_cmd->add_flag("--greedy", oracle_greedy, "randomized greedy lower bound");
    oracle_cmd->add_option("--budget-nodes", oracle_nodes, "node budget for exact search")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--restarts", oracle_restarts, "greedy restarts")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", oracle_seed, "random seed");
    oracle_cmd->add_flag("--forbid-semitrivial", oracle_semitrivial,
                         "also forbid pairs with equal doubles");
    oracle_cmd->add_option("--verify-file", oracle_verify_file,
                           "verify a set file instead of searching");

    try {
        app.parse(argc, argv);

        if (bounds_cmd->parsed()) return run_bounds();
        if (solve_cmd->parsed()) return run_solve_c8(tol);
        if (entropy_cmd->parsed()) return run_entropy(entropy_k, entropy_theta);
        if (kappa_cmd->parsed()) return run_kappa(kappa_k);
        if (codim_cmd->parsed()) return run_codim(codim_n, codim_k, codim_theta, codim_weights);
        if (ring_cmd->parsed()) {
            return run_ring_check(ring_group, ring_thetas, ring_weights, ring_samples, ring_seed);
        }
        if (reg_cmd->parsed()) return run_regularize(reg_input, reg_level);
        if (beh_cmd->parsed()) {
            std::optional<std::int64_t> r2;
            if (beh_radius2 >= 0) r2 = beh_radius2;
            return run_behrend(beh_modulus, beh_dim, r2, beh_emit, beh_verify, beh_count_only,
                               beh_growth);
        }
        if (oracle_cmd->parsed()) {
            if (oracle_exact && oracle_greedy) {
                throw CLI::ValidationError("oracle", "--exact and --greedy are exclusive");
            }
            if (oracle_group.empty() && oracle_verify_file.empty()) {
                throw CLI::ValidationError("oracle", "--group or --verify-file required");
            }
            return run_oracle(oracle_group, oracle_greedy, oracle_nodes, oracle_restarts,
                              oracle_seed, oracle_semitrivial, oracle_verify_file);
        }
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
