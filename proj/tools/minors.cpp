// Command-line front end: one subcommand per pipeline stage, human-readable
// tables on stdout, JSONL records appended to --out, deterministic under
// --seed (env MINORS_SEED). Exit codes: 0 success, 1 negative verdict,
// 2 inconclusive or budget, 3 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "minors/blobbing.hpp"
#include "minors/blowup.hpp"
#include "minors/bounds.hpp"
#include "minors/counting.hpp"
#include "minors/graph_io.hpp"
#include "minors/harness.hpp"
#include "minors/minor.hpp"
#include "minors/params.hpp"
#include "minors/sample.hpp"
#include "minors/star.hpp"
#include "minors/version.hpp"

namespace {

using minors::json;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

void emit_record(const std::string& out_path, const char* cmd, json record) {
    if (out_path.empty()) return;
    record["cmd"] = cmd;
    record["tool"] = {{"name", minors::kToolName}, {"version", minors::kToolVersion}};
    std::ofstream os(out_path, std::ios::app);
    if (!os) throw std::runtime_error("cannot open record file " + out_path);
    os << record.dump() << '\n';
}

void print_kv(const char* key, const std::string& value) {
    std::cout << std::left << std::setw(22) << key << value << '\n';
}

void print_kv(const char* key, double value) {
    std::ostringstream os;
    os << std::setprecision(12) << value;
    print_kv(key, os.str());
}

void print_kv(const char* key, long long value) { print_kv(key, std::to_string(value)); }

// Shared parameter flags. p and alpha switch derivation to the custom route
// and must be given together.
struct ParamArgs {
    double epsilon = 0;
    int d = 0;
    long long t = 0;
    double beta_v = 0, p_v = 0, alpha_v = 0;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--epsilon", epsilon, "slack parameter in (0,1)")->required();
        cmd->add_option("--d", d, "average degree scale")->required();
        cmd->add_option("--t", t, "pattern order, at least d+1")->required();
        beta_opt = cmd->add_option("--beta", beta_v, "exponent for s (default midpoint of (alpha,1))");
        p_opt = cmd->add_option("--p", p_v, "edge probability (custom route, needs --alpha)");
        alpha_opt = cmd->add_option("--alpha", alpha_v, "ell exponent (custom route, needs --p)");
    }

    minors::Params to_params() const {
        std::optional<double> beta;
        if (beta_opt->count() > 0) beta = beta_v;
        bool have_p = p_opt->count() > 0, have_alpha = alpha_opt->count() > 0;
        if (have_p != have_alpha)
            throw std::invalid_argument("--p and --alpha must be given together");
        return have_p ? minors::derive_params_custom(epsilon, d, t, p_v, alpha_v, beta)
                      : minors::derive_params(epsilon, d, t, beta);
    }
};

void print_params(const minors::Params& pr) {
    std::cout << minors::params_record(pr);
}

void print_verdict(const minors::StarVerdict& v) {
    print_kv("mode", minors::star_mode_name(v.mode));
    print_kv("passed", std::string(v.passed ? "yes" : "no"));
    print_kv("threshold", v.threshold.value.get_d());
    print_kv("examined", static_cast<long long>(v.examined));
    print_kv("min_count", static_cast<long long>(v.min_count));
    if (!v.note.empty()) print_kv("note", v.note);
    if (!v.passed && !v.min_sets.empty()) {
        std::cout << "witness sets:\n";
        for (const minors::Bitset& b : v.min_sets) {
            bool first = true;
            b.for_each([&](std::size_t x) {
                std::cout << (first ? "  " : " ") << x;
                first = false;
            });
            std::cout << '\n';
        }
    }
}

void print_g0(const minors::G0Result& res) {
    print_kv("attempts", static_cast<long long>(res.attempts));
    print_kv("attempt", static_cast<long long>(res.attempt));
    print_kv("edges", res.edges);
    print_kv("edge_threshold", res.edge_threshold);
    print_kv("edge_ok", std::string(res.edge_ok ? "yes" : "no"));
    print_verdict(res.verdict);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal minor construction toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "root seed value")->envname("MINORS_SEED");
    std::string out_path;
    app.add_option("--out", out_path, "append a JSONL record to this file");

    auto* cmd_lambda = app.add_subcommand("lambda", "report the extremal constant");

    auto* cmd_params = app.add_subcommand("derive-params", "derive the construction tuple");
    ParamArgs params_args;
    params_args.attach(cmd_params);

    auto* cmd_gen = app.add_subcommand("gen-g0", "sample a base graph with the pair property");
    ParamArgs gen_args;
    gen_args.attach(cmd_gen);
    int gen_retries = 50;
    std::string gen_mode = "sampled", gen_graph_out;
    cmd_gen->add_option("--retries", gen_retries, "resampling attempts");
    cmd_gen->add_option("--mode", gen_mode, "property check mode: exhaustive|sampled|adversarial");
    cmd_gen->add_option("--graph-out", gen_graph_out, "write the accepted graph here");

    auto* cmd_star = app.add_subcommand("verify-star", "check the pair property of a graph");
    ParamArgs star_args;
    star_args.attach(cmd_star);
    std::string star_graph, star_mode = "exhaustive";
    std::uint64_t star_trials = 2000;
    cmd_star->add_option("--graph", star_graph, "graph file")->required();
    cmd_star->add_option("--mode", star_mode, "exhaustive|sampled|adversarial");
    cmd_star->add_option("--trials", star_trials, "sampled-mode trials");

    auto* cmd_blowup = app.add_subcommand("blowup", "replace vertices by independent r-sets");
    std::string blowup_in, blowup_out;
    int blowup_r = 1;
    cmd_blowup->add_option("--graph", blowup_in, "base graph file")->required();
    cmd_blowup->add_option("--r", blowup_r, "class size")->required();
    cmd_blowup->add_option("--graph-out", blowup_out, "write the blown-up graph here");

    auto* cmd_minor = app.add_subcommand("minor-test", "decide minor containment");
    std::string minor_pattern, minor_host;
    std::uint64_t minor_nodes = 50'000'000;
    double minor_time = std::numeric_limits<double>::infinity();
    cmd_minor->add_option("--pattern", minor_pattern, "pattern graph file")->required();
    cmd_minor->add_option("--host", minor_host, "host graph file")->required();
    cmd_minor->add_option("--node-limit", minor_nodes, "search node budget");
    cmd_minor->add_option("--time-limit", minor_time, "search time budget, seconds");

    auto* cmd_gcount = app.add_subcommand("g-count", "count bounded tuples of subsets");
    int gc_d = 0, gc_t = 0;
    long long gc_n = 0;
    cmd_gcount->add_option("--d", gc_d, "ground set size")->required();
    cmd_gcount->add_option("--t", gc_t, "tuple length")->required();
    cmd_gcount->add_option("--n", gc_n, "total size budget")->required();

    auto* cmd_blob = app.add_subcommand("count-blobbings", "count admissible blob sequences");
    int cb_d = 0, cb_t = 0;
    long long cb_capacity = 0, cb_r = 0;
    double cb_budget = 1e9;
    cmd_blob->add_option("--d", cb_d, "base graph order")->required();
    cmd_blob->add_option("--t", cb_t, "blob count")->required();
    cmd_blob->add_option("--capacity", cb_capacity, "total size cap")->required();
    cmd_blob->add_option("--r", cb_r, "per-vertex multiplicity cap")->required();
    cmd_blob->add_option("--work-budget", cb_budget, "enumeration work cap");

    auto* cmd_bounds = app.add_subcommand("bounds", "analytic bound report");
    ParamArgs bounds_args;
    bounds_args.attach(cmd_bounds);
    double bounds_c = 0.5;
    long long bounds_m = 0, bounds_q = 0;
    cmd_bounds->add_option("--c", bounds_c, "target base for c^t");
    auto* bounds_m_opt =
        cmd_bounds->add_option("--m", bounds_m, "pattern edge count for the compatibility bound");
    auto* bounds_q_opt =
        cmd_bounds->add_option("--q", bounds_q, "good pair count for the compatibility bound");

    auto* cmd_estimate = app.add_subcommand("estimate", "empirical minor probability");
    ParamArgs est_args;
    est_args.attach(cmd_estimate);
    int est_trials = 100, est_retries = 50, est_host_cap = 64;
    std::uint64_t est_stream = 0, est_budget = 1'000'000;
    double est_time = std::numeric_limits<double>::infinity();
    std::string est_mode = "sampled";
    cmd_estimate->add_option("--trials", est_trials, "pattern draws");
    cmd_estimate->add_option("--stream", est_stream, "trial substream offset");
    cmd_estimate->add_option("--budget", est_budget, "per-trial node budget");
    cmd_estimate->add_option("--time-limit", est_time, "per-trial time budget, seconds");
    cmd_estimate->add_option("--host-cap", est_host_cap, "largest admissible host order");
    cmd_estimate->add_option("--mode", est_mode, "base property check mode");
    cmd_estimate->add_option("--retries", est_retries, "base graph attempts");

    auto* cmd_run = app.add_subcommand("run", "full pipeline from a config file");
    std::string run_config;
    cmd_run->add_option("--config", run_config, "flat key-value config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        minors::Seed seed{seed_value, 0};

        if (app.got_subcommand(cmd_lambda)) {
            auto lc = minors::lambda_constant();
            double residual = std::exp(lc.x_star) - 2.0 * lc.x_star - 1.0;
            print_kv("x_star", lc.x_star);
            print_kv("lambda", lc.lambda);
            print_kv("residual", residual);
            emit_record(out_path, "lambda",
                        json{{"x_star", lc.x_star}, {"lambda", lc.lambda}, {"residual", residual}});
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_params)) {
            minors::Params pr = params_args.to_params();
            print_params(pr);
            auto avg = minors::target_average_degree(pr);
            print_kv("avg_deg_intermediate", avg.intermediate);
            print_kv("avg_deg_lemma", avg.lemma_guarantee);
            print_kv("avg_deg_headline", avg.headline);
            for (const auto& ck : minors::finite_d_checks(pr))
                print_kv(ck.holds ? "check_ok" : "check_fails", ck.name);
            emit_record(out_path, "derive-params",
                        json{{"params", minors::params_json(pr)},
                             {"bounds", minors::bounds_json(pr, 0.5)}});
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_gen)) {
            minors::Params pr = gen_args.to_params();
            try {
                minors::G0Result res =
                    minors::construct_g0(pr, seed, gen_retries, minors::parse_star_mode(gen_mode));
                print_g0(res);
                if (!gen_graph_out.empty()) minors::write_graph_file(gen_graph_out, res.g0);
                emit_record(out_path, "gen-g0",
                            json{{"params", minors::params_json(pr)},
                                 {"seed", minors::seed_json(seed)},
                                 {"result", minors::g0_json(res)}});
                return kExitSuccess;
            } catch (const minors::g0_failure& e) {
                std::cout << "failed: " << e.what() << "\nbest candidate:\n";
                print_g0(e.best);
                emit_record(out_path, "gen-g0",
                            json{{"params", minors::params_json(pr)},
                                 {"seed", minors::seed_json(seed)},
                                 {"error", e.what()},
                                 {"best", minors::g0_json(e.best)}});
                return kExitNegative;
            }
        }

        if (app.got_subcommand(cmd_star)) {
            minors::Params pr = star_args.to_params();
            minors::Graph g0 = minors::read_graph_file(star_graph);
            minors::StarBudget budget;
            budget.trials = star_trials;
            minors::StarVerdict v =
                minors::verify_star(g0, pr, minors::parse_star_mode(star_mode), seed, budget);
            print_verdict(v);
            emit_record(out_path, "verify-star",
                        json{{"params", minors::params_json(pr)},
                             {"verdict", minors::star_verdict_json(v)}});
            return v.passed ? kExitSuccess : kExitNegative;
        }

        if (app.got_subcommand(cmd_blowup)) {
            minors::Graph base = minors::read_graph_file(blowup_in);
            minors::BlowupGraph bg = minors::blowup(base, blowup_r);
            print_kv("base_n", static_cast<long long>(base.vertex_count()));
            print_kv("n", static_cast<long long>(bg.graph.vertex_count()));
            print_kv("m", static_cast<long long>(bg.graph.edge_count()));
            if (!blowup_out.empty()) minors::write_graph_file(blowup_out, bg.graph);
            emit_record(out_path, "blowup",
                        json{{"r", blowup_r},
                             {"base_n", base.vertex_count()},
                             {"n", bg.graph.vertex_count()},
                             {"m", bg.graph.edge_count()}});
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_minor)) {
            minors::Graph pattern = minors::read_graph_file(minor_pattern);
            minors::Graph host = minors::read_graph_file(minor_host);
            minors::SearchBudget budget{minor_nodes, minor_time};
            minors::MinorResult res = minors::find_minor(pattern, host, budget);
            print_kv("outcome", minors::outcome_name(res.outcome));
            print_kv("nodes", static_cast<long long>(res.nodes));
            json sets = json::array();
            if (res.outcome == minors::MinorOutcome::Model) {
                for (const minors::Bitset& b : res.model) {
                    bool first = true;
                    json one = json::array();
                    b.for_each([&](std::size_t v) {
                        std::cout << (first ? "" : " ") << v;
                        one.push_back(v);
                        first = false;
                    });
                    std::cout << '\n';
                    sets.push_back(one);
                }
            }
            emit_record(out_path, "minor-test",
                        json{{"outcome", minors::outcome_name(res.outcome)},
                             {"nodes", res.nodes},
                             {"model", sets}});
            switch (res.outcome) {
                case minors::MinorOutcome::Model: return kExitSuccess;
                case minors::MinorOutcome::NoMinor: return kExitNegative;
                case minors::MinorOutcome::Inconclusive: return kExitInconclusive;
            }
            return kExitInconclusive;
        }

        if (app.got_subcommand(cmd_gcount)) {
            mpz_class count = minors::g_count(gc_d, gc_t, gc_n);
            mpz_class cap = minors::four_d_power(gc_d, gc_n);
            print_kv("count", count.get_str());
            print_kv("cap_4d_n", cap.get_str());
            emit_record(out_path, "g-count",
                        json{{"d", gc_d},
                             {"t", gc_t},
                             {"n", gc_n},
                             {"count", count.get_str()},
                             {"cap", cap.get_str()}});
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_blob)) {
            mpz_class count = minors::count_blobbings(cb_d, cb_t, cb_capacity, cb_r, cb_budget);
            print_kv("count", count.get_str());
            emit_record(out_path, "count-blobbings",
                        json{{"d", cb_d},
                             {"t", cb_t},
                             {"capacity", cb_capacity},
                             {"r", cb_r},
                             {"count", count.get_str()}});
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_bounds)) {
            minors::Params pr = bounds_args.to_params();
            json record{{"params", minors::params_json(pr)},
                        {"bounds", minors::bounds_json(pr, bounds_c)}};
            minors::UnionBound ub = minors::union_bound_estimate(pr, bounds_c);
            print_kv("log_union_bound", ub.log_bound);
            print_kv("union_bound", ub.bound);
            print_kv("log_c_t", ub.log_c_t);
            print_kv("below_c_t", std::string(ub.below_c_t ? "yes" : "no"));
            print_kv("good_pair_threshold", minors::good_pair_threshold(pr));
            if ((bounds_m_opt->count() > 0) != (bounds_q_opt->count() > 0))
                throw std::invalid_argument("--m and --q must be given together");
            if (bounds_m_opt->count() > 0) {
                minors::CompatBound cb = minors::compatibility_probability_bound(pr, bounds_m, bounds_q);
                print_kv("exact_ratio", cb.exact_ratio.get_d());
                print_kv("relaxed_bound", cb.relaxed_bound);
                print_kv("exp_bound", cb.exp_bound);
                print_kv("chain_applies", std::string(cb.chain_applies ? "yes" : "no"));
                print_kv("chain_certified", std::string(cb.chain_certified ? "yes" : "no"));
                record["compatibility"] = {{"m", bounds_m},
                                           {"q", bounds_q},
                                           {"exact_ratio", cb.exact_ratio.get_str()},
                                           {"relaxed_bound", cb.relaxed_bound},
                                           {"exp_bound", cb.exp_bound},
                                           {"chain_applies", cb.chain_applies},
                                           {"chain_certified", cb.chain_certified}};
            }
            emit_record(out_path, "bounds", std::move(record));
            return kExitSuccess;
        }

        if (app.got_subcommand(cmd_estimate)) {
            minors::Params pr = est_args.to_params();
            minors::EstimateOptions options;
            options.search.node_limit = est_budget;
            options.search.time_limit = est_time;
            options.host_cap = est_host_cap;
            options.mode = minors::parse_star_mode(est_mode);
            options.retries = est_retries;
            options.stream = est_stream;
            try {
                minors::EstimateRun run = minors::estimate_minor_probability(pr, est_trials, seed, options);
                print_kv("host_n", static_cast<long long>(run.host.host.graph.vertex_count()));
                print_kv("host_m", static_cast<long long>(run.host.host.graph.edge_count()));
                print_kv("host_avg_degree", run.host.average_degree_value);
                print_kv("trials", static_cast<long long>(run.estimate.trials));
                print_kv("models", static_cast<long long>(run.estimate.models));
                print_kv("no_minors", static_cast<long long>(run.estimate.no_minors));
                print_kv("inconclusive", static_cast<long long>(run.estimate.inconclusive));
                print_kv("fraction_model", run.estimate.fraction_model);
                print_kv("wilson_low", run.estimate.wilson_low);
                print_kv("wilson_high", run.estimate.wilson_high);
                emit_record(out_path, "estimate",
                            json{{"params", minors::params_json(pr)},
                                 {"seed", minors::seed_json(seed)},
                                 {"stream", est_stream},
                                 {"g0", minors::g0_json(run.host.g0)},
                                 {"host", minors::host_json(run.host)},
                                 {"estimate", minors::estimate_json(run.estimate)}});
                return kExitSuccess;
            } catch (const minors::g0_failure& e) {
                std::cout << "failed: " << e.what() << '\n';
                emit_record(out_path, "estimate",
                            json{{"params", minors::params_json(pr)},
                                 {"seed", minors::seed_json(seed)},
                                 {"error", e.what()},
                                 {"best", minors::g0_json(e.best)}});
                return kExitNegative;
            }
        }

        if (app.got_subcommand(cmd_run)) {
            std::ifstream is(run_config);
            if (!is) throw std::invalid_argument("cannot open config file " + run_config);
            std::ostringstream buffer;
            buffer << is.rdbuf();
            minors::ExperimentConfig cfg = minors::parse_experiment_config(buffer.str());
            if (seed_opt->count() > 0) cfg.seed.value = seed_value;
            json record = minors::run_experiment(cfg);
            if (!out_path.empty()) emit_record(out_path, "run", record);
            if (record.contains("failure")) {
                const json& failure = record["failure"];
                std::cout << "failed at stage " << failure["stage"].get<std::string>() << ": "
                          << failure["error"].get<std::string>() << '\n';
                std::string stage = failure["stage"].get<std::string>();
                if (stage == "derive-params") return kExitUsage;
                if (stage == "gen-g0") return kExitNegative;
                return kExitInconclusive;
            }
            print_kv("host_n", record["host"]["n"].dump());
            print_kv("host_avg_degree", record["host"]["average_degree"].dump());
            print_kv("trials", record["estimate"]["trials"].dump());
            print_kv("fraction_model", record["estimate"]["fraction_model"].dump());
            print_kv("wilson_low", record["estimate"]["wilson_low"].dump());
            print_kv("wilson_high", record["estimate"]["wilson_high"].dump());
            print_kv("log_union_bound", record["bounds"]["log_union_bound"].dump());
            return kExitSuccess;
        }
    } catch (const minors::budget_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const minors::config_error& e) {
        std::cerr << "config: " << e.what() << '\n';
        return kExitUsage;
    } catch (const minors::graph_format_error& e) {
        std::cerr << "graph format: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
