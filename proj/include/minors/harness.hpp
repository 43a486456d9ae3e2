#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minors/blobbing.hpp"
#include "minors/blowup.hpp"
#include "minors/bounds.hpp"
#include "minors/graph.hpp"
#include "minors/minor.hpp"
#include "minors/params.hpp"
#include "minors/rng.hpp"
#include "minors/sample.hpp"
#include "minors/star.hpp"
#include "minors/version.hpp"

namespace minors {

using nlohmann::json;

struct HostReport {
    G0Result g0;
    BlowupGraph host;
    double average_degree_value = 0;
    double size_bound = 0;   // (1 - eps/4) ell t
    bool size_ok = false;    // |V(G)| < size_bound; flagged, not enforced
    double degree_bound = 0; // (1 - eps/2)^2 p t ell
    bool degree_ok = false;
};

struct EstimateOptions {
    SearchBudget search;
    int host_cap = 64;
    StarMode mode = StarMode::Sampled;
    int retries = 50;
    StarBudget star;
    std::uint64_t stream = 0;
};

inline HostReport build_host(const Params& pr, Seed seed, const EstimateOptions& options = {}) {
    HostReport out;
    out.g0 = construct_g0(pr, seed, options.retries, options.mode, options.star);
    if (pr.r > std::numeric_limits<int>::max()) throw std::invalid_argument("build_host: r too large");
    out.host = blowup(out.g0.g0, static_cast<int>(pr.r));
    if (out.host.graph.vertex_count() != static_cast<long long>(pr.d) * pr.r)
        throw std::logic_error("build_host: |V(G)| != d*r");
    out.average_degree_value = average_degree(out.host.graph).get_d();
    out.size_bound = (1.0 - pr.epsilon / 4.0) * pr.ell * static_cast<double>(pr.t);
    out.size_ok = static_cast<double>(out.host.graph.vertex_count()) < out.size_bound;
    out.degree_bound = target_average_degree(pr).intermediate;
    out.degree_ok = out.average_degree_value >= out.degree_bound;
    return out;
}

inline std::pair<double, double> wilson_interval(long long successes, long long n,
                                                 double z = 1.959963984540054) {
    if (n < 1) throw std::invalid_argument("wilson_interval: n must be positive");
    double ph = static_cast<double>(successes) / static_cast<double>(n);
    double zz = z * z;
    double denom = 1.0 + zz / static_cast<double>(n);
    double center = (ph + zz / (2.0 * static_cast<double>(n))) / denom;
    double half = z *
                  std::sqrt(ph * (1.0 - ph) / static_cast<double>(n) +
                            zz / (4.0 * static_cast<double>(n) * static_cast<double>(n))) /
                  denom;
    // the interval always contains ph; enforce it against roundoff at the ends
    double low = std::min(std::max(0.0, center - half), ph);
    double high = std::max(std::min(1.0, center + half), ph);
    return {low, high};
}

struct TrialResult {
    int index = 0;
    MinorOutcome outcome = MinorOutcome::Inconclusive;
    std::uint64_t nodes = 0;
};

struct EstimateResult {
    int trials = 0;
    int models = 0;
    int no_minors = 0;
    int inconclusive = 0;
    double fraction_model = 0;
    double fraction_no_minor = 0;
    double fraction_inconclusive = 0;
    double wilson_low = 0;
    double wilson_high = 0;
    std::vector<TrialResult> per_trial;
};

struct EstimateRun {
    HostReport host;
    EstimateResult estimate;
};

// One host, `trials` independent H draws. Inconclusive outcomes stay a
// category of their own; the Wilson interval covers the Model fraction only.
inline EstimateRun estimate_minor_probability(const Params& pr, int trials, Seed seed,
                                              const EstimateOptions& options = {}) {
    if (trials < 1) throw std::invalid_argument("estimate_minor_probability: trials must be positive");
    long long host_n = static_cast<long long>(pr.d) * pr.r;
    if (host_n > options.host_cap)
        throw std::invalid_argument("estimate_minor_probability: host has " + std::to_string(host_n) +
                                    " vertices, above the feasibility cap " +
                                    std::to_string(options.host_cap));
    EstimateRun run{build_host(pr, seed, options), {}};
    EstimateResult& est = run.estimate;
    est.trials = trials;
    for (int i = 0; i < trials; ++i) {
        Seed trial_seed{seed.value,
                        streams::trial_base + options.stream + static_cast<std::uint64_t>(i)};
        Graph h = sample_h(static_cast<int>(pr.t), pr.d, trial_seed);
        MinorResult res = find_minor(h, run.host.host.graph, options.search);
        switch (res.outcome) {
            case MinorOutcome::Model: ++est.models; break;
            case MinorOutcome::NoMinor: ++est.no_minors; break;
            case MinorOutcome::Inconclusive: ++est.inconclusive; break;
        }
        est.per_trial.push_back({i, res.outcome, res.nodes});
    }
    est.fraction_model = static_cast<double>(est.models) / trials;
    est.fraction_no_minor = static_cast<double>(est.no_minors) / trials;
    est.fraction_inconclusive = static_cast<double>(est.inconclusive) / trials;
    auto [lo, hi] = wilson_interval(est.models, trials);
    est.wilson_low = lo;
    est.wilson_high = hi;
    return run;
}

inline const char* outcome_name(MinorOutcome o) {
    switch (o) {
        case MinorOutcome::Model: return "model";
        case MinorOutcome::NoMinor: return "no_minor";
        case MinorOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

// ---- experiment config ----------------------------------------------------

struct ExperimentConfig {
    double epsilon = 0;
    int d = 0;
    long long t = 0;
    std::optional<double> beta, p, alpha;
    // redundant keys, accepted for record replay and cross-checked against
    // the derived values
    std::optional<double> x_star, b, ell;
    std::optional<long long> s, r;
    int trials = 100;
    Seed seed;
    std::uint64_t stream = 0;
    StarMode mode = StarMode::Sampled;
    std::uint64_t budget = 1'000'000;
    double time_limit = std::numeric_limits<double>::infinity();
    double c = 0.5;
    int retries = 50;
    std::uint64_t star_trials = 2000;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream is(text);
    T value;
    is >> value;
    if (is.fail() || !is.eof()) throw config_error("config key " + key + ": bad value '" + text + "'");
    return value;
}

} // namespace detail

// Flat key-value text: one `key value` (or `key = value`) per line, '#'
// comments. Unknown keys are errors so typos cannot silently change a run.
inline ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    bool have_epsilon = false, have_d = false, have_t = false;
    std::vector<std::string> seen;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tok(line);
        std::string key, value, extra;
        if (!(tok >> key)) continue;
        if (!(tok >> value)) throw config_error("config key " + key + ": missing value");
        if (value == "=" && !(tok >> value)) throw config_error("config key " + key + ": missing value");
        if (tok >> extra) throw config_error("config key " + key + ": trailing token '" + extra + "'");
        for (const std::string& s : seen)
            if (s == key) throw config_error("config key " + key + ": duplicated");
        seen.push_back(key);

        if (key == "epsilon") { cfg.epsilon = detail::parse_number<double>(key, value); have_epsilon = true; }
        else if (key == "d") { cfg.d = detail::parse_number<int>(key, value); have_d = true; }
        else if (key == "t") { cfg.t = detail::parse_number<long long>(key, value); have_t = true; }
        else if (key == "beta") cfg.beta = detail::parse_number<double>(key, value);
        else if (key == "p") cfg.p = detail::parse_number<double>(key, value);
        else if (key == "alpha") cfg.alpha = detail::parse_number<double>(key, value);
        else if (key == "x_star") cfg.x_star = detail::parse_number<double>(key, value);
        else if (key == "b") cfg.b = detail::parse_number<double>(key, value);
        else if (key == "ell") cfg.ell = detail::parse_number<double>(key, value);
        else if (key == "s") cfg.s = detail::parse_number<long long>(key, value);
        else if (key == "r") cfg.r = detail::parse_number<long long>(key, value);
        else if (key == "trials") cfg.trials = detail::parse_number<int>(key, value);
        else if (key == "seed") cfg.seed.value = detail::parse_number<std::uint64_t>(key, value);
        else if (key == "stream") cfg.stream = detail::parse_number<std::uint64_t>(key, value);
        else if (key == "mode") cfg.mode = parse_star_mode(value);
        else if (key == "budget") cfg.budget = detail::parse_number<std::uint64_t>(key, value);
        else if (key == "time_limit") cfg.time_limit = detail::parse_number<double>(key, value);
        else if (key == "c") cfg.c = detail::parse_number<double>(key, value);
        else if (key == "retries") cfg.retries = detail::parse_number<int>(key, value);
        else if (key == "star_trials") cfg.star_trials = detail::parse_number<std::uint64_t>(key, value);
        else throw config_error("config key " + key + ": unknown");
    }
    if (!have_epsilon) throw config_error("config missing required key: epsilon");
    if (!have_d) throw config_error("config missing required key: d");
    if (!have_t) throw config_error("config missing required key: t");
    return cfg;
}

namespace detail {

inline void check_config_echo(const char* key, double given, double derived) {
    double scale = std::max(1.0, std::abs(derived));
    if (std::abs(given - derived) > 1e-9 * scale)
        throw config_error(std::string("config key ") + key + ": inconsistent with derived value");
}

} // namespace detail

inline Params params_from_config(const ExperimentConfig& cfg) {
    if (cfg.p.has_value() != cfg.alpha.has_value())
        throw config_error("config keys p and alpha must be given together");
    Params pr = cfg.p ? derive_params_custom(cfg.epsilon, cfg.d, cfg.t, *cfg.p, *cfg.alpha, cfg.beta)
                      : derive_params(cfg.epsilon, cfg.d, cfg.t, cfg.beta);
    if (cfg.x_star) detail::check_config_echo("x_star", *cfg.x_star, pr.x_star);
    if (cfg.b) detail::check_config_echo("b", *cfg.b, pr.b);
    if (cfg.ell) detail::check_config_echo("ell", *cfg.ell, pr.ell);
    if (cfg.s && *cfg.s != pr.s) throw config_error("config key s: inconsistent with derived value");
    if (cfg.r && *cfg.r != pr.r) throw config_error("config key r: inconsistent with derived value");
    return pr;
}

inline EstimateOptions options_from_config(const ExperimentConfig& cfg) {
    EstimateOptions opt;
    opt.search.node_limit = cfg.budget;
    opt.search.time_limit = cfg.time_limit;
    opt.mode = cfg.mode;
    opt.retries = cfg.retries;
    opt.star.trials = cfg.star_trials;
    opt.stream = cfg.stream;
    return opt;
}

// ---- JSON records ----------------------------------------------------------

inline json seed_json(Seed s) { return json{{"value", s.value}, {"stream", s.stream}}; }

inline json params_json(const Params& pr) {
    return json{{"epsilon", pr.epsilon}, {"x_star", pr.x_star}, {"b", pr.b},   {"p", pr.p},
                {"alpha", pr.alpha},     {"beta", pr.beta},     {"d", pr.d},   {"t", pr.t},
                {"ell", pr.ell},         {"s", pr.s},           {"r", pr.r}};
}

inline json star_verdict_json(const StarVerdict& v) {
    json sets = json::array();
    for (const Bitset& b : v.min_sets) {
        json one = json::array();
        b.for_each([&](std::size_t x) { one.push_back(x); });
        sets.push_back(one);
    }
    return json{{"mode", star_mode_name(v.mode)},
                {"passed", v.passed},
                {"threshold", {{"q64", v.threshold.q64}, {"fraction", v.threshold.value.get_str()}}},
                {"seed", seed_json(v.seed)},
                {"examined", v.examined},
                {"min_count", v.min_count},
                {"min_sets", sets},
                {"note", v.note}};
}

inline json g0_json(const G0Result& g0) {
    return json{{"attempts", g0.attempts},     {"attempt", g0.attempt}, {"edges", g0.edges},
                {"edge_threshold", g0.edge_threshold}, {"edge_ok", g0.edge_ok},
                {"success", g0.success},       {"verdict", star_verdict_json(g0.verdict)}};
}

inline json host_json(const HostReport& host) {
    return json{{"n", host.host.graph.vertex_count()},
                {"m", host.host.graph.edge_count()},
                {"r", host.host.r},
                {"average_degree", host.average_degree_value},
                {"size_bound", host.size_bound},
                {"size_ok", host.size_ok},
                {"degree_bound", host.degree_bound},
                {"degree_ok", host.degree_ok}};
}

inline json bounds_json(const Params& pr, double c) {
    UnionBound ub = union_bound_estimate(pr, c);
    AverageDegreeBounds avg = target_average_degree(pr);
    json checks = json::array();
    for (const FiniteDCheck& ck : finite_d_checks(pr))
        checks.push_back({{"name", ck.name}, {"lhs", ck.lhs}, {"rhs", ck.rhs}, {"holds", ck.holds}});
    return json{{"log_union_bound", ub.log_bound},
                {"union_bound", ub.bound},
                {"c", ub.c},
                {"log_c_t", ub.log_c_t},
                {"below_c_t", ub.below_c_t},
                {"good_pair_threshold", good_pair_threshold(pr)},
                {"average_degree_intermediate", avg.intermediate},
                {"average_degree_lemma", avg.lemma_guarantee},
                {"average_degree_headline", avg.headline},
                {"finite_d_checks", checks}};
}

inline json estimate_json(const EstimateResult& est) {
    json trials = json::array();
    for (const TrialResult& tr : est.per_trial)
        trials.push_back({{"i", tr.index}, {"outcome", outcome_name(tr.outcome)}, {"nodes", tr.nodes}});
    return json{{"trials", est.trials},
                {"models", est.models},
                {"no_minors", est.no_minors},
                {"inconclusive", est.inconclusive},
                {"fraction_model", est.fraction_model},
                {"fraction_no_minor", est.fraction_no_minor},
                {"fraction_inconclusive", est.fraction_inconclusive},
                {"wilson_low", est.wilson_low},
                {"wilson_high", est.wilson_high},
                {"per_trial", trials}};
}

inline json config_json(const ExperimentConfig& cfg) {
    json j{{"epsilon", cfg.epsilon},
           {"d", cfg.d},
           {"t", cfg.t},
           {"trials", cfg.trials},
           {"seed", cfg.seed.value},
           {"stream", cfg.stream},
           {"mode", star_mode_name(cfg.mode)},
           {"budget", cfg.budget},
           {"c", cfg.c},
           {"retries", cfg.retries},
           {"star_trials", cfg.star_trials}};
    if (cfg.beta) j["beta"] = *cfg.beta;
    if (cfg.p) j["p"] = *cfg.p;
    if (cfg.alpha) j["alpha"] = *cfg.alpha;
    if (std::isfinite(cfg.time_limit)) j["time_limit"] = cfg.time_limit;
    return j;
}

// Self-contained run record: re-running with the same config reproduces every
// field except timestamps.
inline json run_experiment(const ExperimentConfig& cfg) {
    auto now_ms = [] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::system_clock::now().time_since_epoch())
            .count();
    };
    json record{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                {"config", config_json(cfg)},
                {"timestamps", {{"started_unix_ms", now_ms()}}}};
    auto fail = [&](const char* stage, const std::string& message, json extra = json::object()) {
        extra["stage"] = stage;
        extra["error"] = message;
        record["failure"] = std::move(extra);
        record["timestamps"]["finished_unix_ms"] = now_ms();
        return record;
    };

    Params pr;
    try {
        pr = params_from_config(cfg);
    } catch (const std::exception& e) {
        return fail("derive-params", e.what());
    }
    record["params"] = params_json(pr);
    record["seed"] = seed_json(cfg.seed);
    try {
        record["bounds"] = bounds_json(pr, cfg.c);
    } catch (const std::exception& e) {
        return fail("bounds", e.what());
    }

    EstimateRun run;
    try {
        run = estimate_minor_probability(pr, cfg.trials, cfg.seed, options_from_config(cfg));
    } catch (const g0_failure& e) {
        return fail("gen-g0", e.what(), json{{"best", g0_json(e.best)}});
    } catch (const std::exception& e) {
        return fail("estimate", e.what());
    }
    record["g0"] = g0_json(run.host.g0);
    record["host"] = host_json(run.host);
    record["estimate"] = estimate_json(run.estimate);
    record["timestamps"]["finished_unix_ms"] = now_ms();
    return record;
}

} // namespace minors
