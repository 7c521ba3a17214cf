#include "mstd/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mstd/constructions.hpp"
#include "mstd/core_sets.hpp"
#include "mstd/modular.hpp"
#include "mstd/search.hpp"
#include "mstd/theorem8.hpp"

namespace mstd {

using ordered_json = nlohmann::ordered_json;

const char* const kToolVersion = "1.0.0";

namespace {

ordered_json set_json(const IntSet& a) { return ordered_json(a.elements()); }

// 12 significant digits, then back to double so JSON prints the short form.
double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::stod(buf);
}

ordered_json profile_json(const IntSet& a) {
    SumDiffProfile p = profile(a);
    ordered_json j;
    j["size"] = a.size();
    j["min"] = a.min();
    j["max"] = a.max();
    j["diameter"] = a.diameter();
    j["sum_size"] = p.sum_size;
    j["diff_size"] = p.diff_size;
    j["delta"] = p.delta;
    j["is_mstd"] = p.is_mstd;
    if (p.f_ratio) j["f_ratio"] = round12(*p.f_ratio);
    j["missing_sums"] = p.missing_sums;
    j["missing_diffs"] = p.missing_diffs;
    return j;
}

ordered_json symmetry_json(const IntSet& a) {
    SymmetryReport r = symmetry_report(a);
    ordered_json j;
    j["is_symmetric"] = r.is_symmetric;
    if (r.center_doubled) j["center_doubled"] = *r.center_doubled;
    j["s_value"] = r.s_value;
    j["witness_center"] = r.witness_center;
    j["witness_subset"] = set_json(r.witness_subset);
    return j;
}

ordered_json report_json(const ReductionReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["reducible"] = r.reducible;
    j["sum"] = r.sum;
    j["diff"] = r.diff;
    j["f_mod"] = r.f_mod;
    j["good"] = r.good;
    return j;
}

ordered_json construction_json(const ConstructionResult& r) {
    ordered_json j;
    j["primary_set"] = set_json(r.primary_set);
    if (r.companion_set) j["companion_set"] = set_json(*r.companion_set);
    j["symmetric_core"] = set_json(r.symmetric_core);
    j["claimed_delta"] = r.claimed_delta;
    j["verified"] = r.verified;
    j["primary_profile"] = profile_json(r.primary_set);
    if (r.companion_set) j["companion_profile"] = profile_json(*r.companion_set);
    return j;
}

ordered_json envelope(const std::string& command, ordered_json input, ordered_json result,
                      std::optional<uint64_t> seed = std::nullopt) {
    ordered_json env;
    env["command"] = command;
    env["input"] = std::move(input);
    env["result"] = std::move(result);
    env["version"] = kToolVersion;
    if (seed) env["seed"] = *seed;
    return env;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- per-command option bags -------------------------------------------

struct AnalyzeOpts {
    std::string set;
};

struct ConstructOpts {
    std::string family;
    std::optional<int64_t> n, k, d, l, t, m, lambda, mu;
    std::string set, set_b, name;
};

struct ReduceOpts {
    std::string set;
    std::optional<int64_t> n;
    bool scan = false;
    std::optional<int64_t> n_max;
};

struct ReplicateOpts {
    std::string set;
    int64_t n = 0;
    int64_t t = 1;
};

struct SearchOpts {
    int64_t size = 0;
    int64_t max_diameter = 0;
    std::optional<int64_t> rep_threshold;
    int64_t workers = 0;
    std::optional<int64_t> cap;
    bool jsonl = false;
};

struct DensityOpts {
    int64_t n = 0;
    std::optional<int64_t> samples;
    bool exhaustive = false;
    uint64_t seed = 0;
    int64_t workers = 0;
};

struct Theorem8Opts {
    int64_t j = 0;
    int64_t k = 0;
    int64_t n = 0;
    std::string fill = "full";
    std::optional<int64_t> samples;
    uint64_t seed = 0;
};

struct CatalogOpts {
    std::string name;
};

struct RegressionOpts {
    std::string manifest;
};

// ---- command handlers ----------------------------------------------------

CliResult ok(const std::string& command, ordered_json input, ordered_json result,
             std::optional<uint64_t> seed = std::nullopt) {
    return CliResult{0, dump(envelope(command, std::move(input), std::move(result), seed))};
}

CliResult do_analyze(const AnalyzeOpts& o) {
    IntSet a = parse_set(o.set);
    ordered_json input{{"set", o.set}};
    ordered_json result;
    result["set"] = set_json(a);
    ordered_json prof = profile_json(a);
    for (auto& [key, value] : prof.items()) result[key] = value;
    result["normalized"] = set_json(normalize(a));
    result["canonical_form"] = set_json(canonical_form(a));
    result["symmetry"] = symmetry_json(a);
    return ok("analyze", input, result);
}

int64_t need(const std::optional<int64_t>& v, const char* flag, const char* family) {
    if (!v) throw validation_error(std::string("construct ") + family + " requires " + flag);
    return *v;
}

CliResult do_construct(const ConstructOpts& o) {
    ordered_json input{{"family", o.family}};
    ordered_json result;
    if (o.family == "T2") {
        int64_t n = need(o.n, "--n", "T2"), k = need(o.k, "--k", "T2"), d = need(o.d, "--d", "T2");
        input["n"] = n;
        input["k"] = k;
        input["d"] = d;
        result = construction_json(theorem2(n, k, d));
    } else if (o.family == "T3") {
        int64_t n = need(o.n, "--n", "T3"), l = need(o.l, "--l", "T3");
        input["n"] = n;
        input["l"] = l;
        result = construction_json(theorem3(n, l));
    } else if (o.family == "T4") {
        int64_t n = need(o.n, "--n", "T4"), d = need(o.d, "--d", "T4");
        input["n"] = n;
        input["d"] = d;
        result = construction_json(theorem4(n, d));
    } else if (o.family == "T5") {
        int64_t n = need(o.n, "--n", "T5"), k = need(o.k, "--k", "T5");
        input["n"] = n;
        input["k"] = k;
        result = construction_json(theorem5(n, k));
    } else if (o.family == "T6") {
        int64_t n = need(o.n, "--n", "T6"), k = need(o.k, "--k", "T6");
        input["n"] = n;
        input["k"] = k;
        result = construction_json(theorem6(n, k));
    } else if (o.family == "base_expand") {
        if (o.set.empty()) throw validation_error("construct base_expand requires --set");
        int64_t t = need(o.t, "--t", "base_expand");
        IntSet a = parse_set(o.set);
        input["set"] = o.set;
        input["t"] = t;
        if (o.m) input["m"] = *o.m;
        IntSet out = base_expand(a, t, o.m);
        result["set"] = set_json(out);
        result["profile"] = profile_json(out);
    } else if (o.family == "product_embed") {
        if (o.set.empty() || o.set_b.empty())
            throw validation_error("construct product_embed requires --set and --set-b");
        IntSet a = parse_set(o.set);
        IntSet b = parse_set(o.set_b);
        input["set"] = o.set;
        input["set_b"] = o.set_b;
        if (o.lambda) input["lambda"] = *o.lambda;
        if (o.mu) input["mu"] = *o.mu;
        IntSet out = product_embed(a, b, o.lambda, o.mu);
        result["set"] = set_json(out);
        result["profile"] = profile_json(out);
    } else if (o.family == "catalog") {
        if (o.name.empty()) throw validation_error("construct catalog requires --name");
        input["name"] = o.name;
        IntSet a = catalog(o.name);
        result["set"] = set_json(a);
        result["profile"] = profile_json(a);
    } else {
        throw validation_error("unknown construction family: " + o.family);
    }
    return ok("construct", input, result);
}

CliResult do_reduce(const ReduceOpts& o) {
    IntSet a = parse_set(o.set);
    ordered_json input{{"set", o.set}};
    if (o.scan == o.n.has_value())
        throw validation_error("reduce requires exactly one of --n or --scan");
    ordered_json result;
    if (o.n) {
        input["n"] = *o.n;
        result = report_json(reduction_report(a, *o.n));
    } else {
        int64_t n_max = o.n_max.value_or(2 * a.max() + 1);
        input["scan"] = true;
        input["n_max"] = n_max;
        ordered_json rows = ordered_json::array();
        for (const auto& rep : good_reduction_search(a, n_max)) rows.push_back(report_json(rep));
        result["n_max"] = n_max;
        result["good_reductions"] = rows;
    }
    return ok("reduce", input, result);
}

CliResult do_replicate(const ReplicateOpts& o) {
    IntSet a = parse_set(o.set);
    ordered_json input{{"set", o.set}, {"n", o.n}, {"t", o.t}};
    IntSet out = replicate(a, o.n, o.t);
    SumDiffProfile before = profile(a);
    SumDiffProfile after = profile(out);
    CyclicProfile cyc = cyclic_profile(reduce_mod(a, o.n));
    ordered_json result;
    result["set"] = set_json(out);
    result["sum_size"] = after.sum_size;
    result["diff_size"] = after.diff_size;
    result["delta"] = after.delta;
    result["delta_before"] = before.delta;
    result["delta_growth"] = after.delta - before.delta;
    result["f_mod"] = cyc.f_mod;
    return ok("replicate", input, result);
}

CliResult do_search(const SearchOpts& o) {
    SearchConfig cfg;
    cfg.set_size = o.size;
    cfg.max_diameter = o.max_diameter;
    cfg.rep_threshold = o.rep_threshold;
    cfg.parallelism = o.workers;
    if (o.cap) cfg.resource_cap = *o.cap;
    SearchOutcome out = enumerate_mstd(cfg);

    ordered_json reps = ordered_json::array();
    for (const IntSet& a : out.canonical_reps) {
        SumDiffProfile p = profile(a);
        ordered_json row;
        row["set"] = set_json(a);
        row["sum_size"] = p.sum_size;
        row["diff_size"] = p.diff_size;
        row["delta"] = p.delta;
        reps.push_back(row);
    }
    if (o.jsonl) {
        std::string lines;
        for (const auto& row : reps) lines += row.dump() + "\n";
        return CliResult{0, lines};
    }

    ordered_json input{{"size", o.size}, {"max_diameter", o.max_diameter}};
    if (o.rep_threshold) input["rep_threshold"] = *o.rep_threshold;
    ordered_json result;
    result["enumerated_count"] = out.enumerated_count;
    result["class_count"] = static_cast<int64_t>(out.canonical_reps.size());
    result["canonical_reps"] = reps;
    return ok("search", input, result);
}

CliResult do_density(const DensityOpts& o) {
    if (o.exhaustive == o.samples.has_value())
        throw validation_error("density requires exactly one of --samples or --exhaustive");
    ordered_json input{{"n", o.n}};
    std::optional<uint64_t> seed_echo;
    if (o.exhaustive) {
        input["exhaustive"] = true;
    } else {
        input["samples"] = *o.samples;
        seed_echo = o.seed;
    }
    DensityResult r = mstd_density(o.n, o.samples, o.seed, o.workers);
    ordered_json result;
    result["n"] = r.n;
    result["exhaustive"] = r.exhaustive;
    result["total"] = r.total;
    result["mstd_count"] = r.mstd_count;
    result["estimate"] = round12(r.estimate);
    result["wilson_low"] = round12(r.wilson_low);
    result["wilson_high"] = round12(r.wilson_high);
    return ok("density", input, result, seed_echo);
}

CliResult do_theorem8(const Theorem8Opts& o) {
    ordered_json input{{"j", o.j}, {"k", o.k}, {"n", o.n}};
    if (o.samples) {
        input["samples"] = *o.samples;
        EstimateResult e = estimate_cjk(o.j, o.k, o.n, *o.samples, o.seed);
        ordered_json result;
        result["point"] = round12(e.point);
        result["wilson_low"] = round12(e.wilson_low);
        result["wilson_high"] = round12(e.wilson_high);
        result["hits"] = e.hits;
        result["samples"] = e.samples;
        return ok("theorem8", input, result, o.seed);
    }

    if (o.fill != "full" && o.fill != "random")
        throw validation_error("theorem8 --fill must be full or random");
    input["fill"] = o.fill;
    const bool random = o.fill == "random";
    DeficiencyTarget target{o.j, o.k, o.n};
    IntSet a = assemble_Ajk(target, random ? FillKind::Random : FillKind::Full, o.seed);
    TargetCertificate cert = verify_target(a, target);
    ordered_json result;
    result["set"] = set_json(a);
    result["missing_sums"] = cert.missing_sums;
    result["missing_diffs"] = cert.missing_diffs;
    result["verified"] = cert.verified;
    return ok("theorem8", input, result,
              random ? std::optional<uint64_t>(o.seed) : std::nullopt);
}

CliResult do_catalog(const CatalogOpts& o) {
    ordered_json input = ordered_json::object();
    ordered_json result;
    if (!o.name.empty()) {
        input["name"] = o.name;
        IntSet a = catalog(o.name);
        result["name"] = o.name;
        result["set"] = set_json(a);
        result["profile"] = profile_json(a);
    } else {
        ordered_json rows = ordered_json::array();
        for (const std::string& name : catalog_names()) {
            IntSet a = catalog(name);
            SumDiffProfile p = profile(a);
            ordered_json row;
            row["name"] = name;
            row["set"] = set_json(a);
            row["sum_size"] = p.sum_size;
            row["diff_size"] = p.diff_size;
            row["delta"] = p.delta;
            rows.push_back(row);
        }
        result["sets"] = rows;
    }
    return ok("catalog", input, result);
}

// Recursive subset match: every value in `expected` must appear in `actual`.
// Numbers involving a float compare within tol; everything else exactly.
bool subset_match(const ordered_json& expected, const ordered_json& actual,
                  double tol, const std::string& path, std::string& why) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            why = path + ": expected object";
            return false;
        }
        for (auto& [key, value] : expected.items()) {
            if (!actual.contains(key)) {
                why = path + "/" + key + ": missing";
                return false;
            }
            if (!subset_match(value, actual.at(key), tol, path + "/" + key, why)) return false;
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            why = path + ": array mismatch";
            return false;
        }
        for (size_t i = 0; i < expected.size(); ++i) {
            if (!subset_match(expected[i], actual[i], tol, path + "[" + std::to_string(i) + "]",
                              why))
                return false;
        }
        return true;
    }
    if (expected.is_number() && actual.is_number() &&
        (expected.is_number_float() || actual.is_number_float())) {
        double e = expected.get<double>(), a = actual.get<double>();
        if (std::fabs(e - a) <= tol) return true;
        why = path + ": " + actual.dump() + " != " + expected.dump();
        return false;
    }
    if (expected != actual) {
        why = path + ": " + actual.dump() + " != " + expected.dump();
        return false;
    }
    return true;
}

CliResult do_regression(const RegressionOpts& o) {
    std::ifstream in(o.manifest);
    if (!in) throw validation_error("cannot open manifest: " + o.manifest);
    ordered_json manifest;
    try {
        in >> manifest;
    } catch (const std::exception& e) {
        throw validation_error(std::string("manifest parse error: ") + e.what());
    }
    if (!manifest.is_array()) throw validation_error("manifest must be a JSON array");

    ordered_json input{{"manifest", o.manifest}};
    ordered_json failures = ordered_json::array();
    int64_t passed = 0;
    for (size_t i = 0; i < manifest.size(); ++i) {
        const ordered_json& rec = manifest[i];
        std::string name = rec.value("name", "record[" + std::to_string(i) + "]");
        auto fail = [&](const std::string& why) {
            ordered_json f;
            f["name"] = name;
            f["detail"] = why;
            failures.push_back(f);
        };
        if (!rec.contains("command") || !rec.contains("args") || !rec.contains("expected")) {
            fail("record needs command/args/expected");
            continue;
        }
        std::string command = rec.at("command").get<std::string>();
        if (command == "regression") {
            fail("manifests cannot nest regression runs");
            continue;
        }
        std::vector<std::string> argv{command};
        for (const auto& tok : rec.at("args")) argv.push_back(tok.get<std::string>());
        CliResult rr = run_cli(argv);
        if (rr.exit_code != 0) {
            fail("exit code " + std::to_string(rr.exit_code));
            continue;
        }
        ordered_json env = ordered_json::parse(rr.output);
        double tol = rec.value("tol", 1e-9);
        std::string why;
        if (!subset_match(rec.at("expected"), env.at("result"), tol, "result", why)) {
            fail(why);
            continue;
        }
        ++passed;
    }

    ordered_json result;
    result["records"] = static_cast<int64_t>(manifest.size());
    result["passed"] = passed;
    result["failed"] = static_cast<int64_t>(failures.size());
    result["failures"] = failures;
    if (manifest.empty()) result["warning"] = "empty manifest: nothing was checked";
    CliResult res = ok("regression", input, result);
    res.exit_code = failures.empty() ? 0 : 1;
    return res;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"MSTD set toolkit: construct, verify, classify and sample "
                 "sets with more sums than differences"};
    app.require_subcommand(1);

    AnalyzeOpts an;
    auto* analyze = app.add_subcommand("analyze", "Profile one set");
    analyze->add_option("--set", an.set, "comma-separated set literal")->required();

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "Run a generator family");
    construct->add_option("--family", co.family,
                          "T2|T3|T4|T5|T6|base_expand|product_embed|catalog")
        ->required();
    construct->add_option("--n", co.n);
    construct->add_option("--k", co.k);
    construct->add_option("--d", co.d);
    construct->add_option("--l", co.l);
    construct->add_option("--t", co.t);
    construct->add_option("--m", co.m);
    construct->add_option("--lambda", co.lambda);
    construct->add_option("--mu", co.mu);
    construct->add_option("--set", co.set);
    construct->add_option("--set-b", co.set_b);
    construct->add_option("--name", co.name);

    ReduceOpts re;
    auto* reduce = app.add_subcommand("reduce", "Reduction report(s) modulo n");
    reduce->add_option("--set", re.set)->required();
    reduce->add_option("--n", re.n);
    reduce->add_flag("--scan", re.scan, "scan all moduli for good reductions");
    reduce->add_option("--n-max", re.n_max);

    ReplicateOpts rp;
    auto* repl = app.add_subcommand("replicate", "A ∪ (A+n) ∪ ... delta growth");
    repl->add_option("--set", rp.set)->required();
    repl->add_option("--n", rp.n)->required();
    repl->add_option("--t", rp.t)->required();

    SearchOpts se;
    auto* search = app.add_subcommand("search", "Enumerate MSTD classes");
    search->add_option("--size", se.size)->required();
    search->add_option("--max-diameter", se.max_diameter)->required();
    search->add_option("--rep-threshold", se.rep_threshold);
    search->add_option("--workers", se.workers);
    search->add_option("--cap", se.cap);
    search->add_flag("--jsonl", se.jsonl, "one canonical set per line");

    DensityOpts de;
    auto* density = app.add_subcommand("density", "MSTD density over subsets of [0,n]");
    density->add_option("--n", de.n)->required();
    density->add_option("--samples", de.samples);
    density->add_flag("--exhaustive", de.exhaustive);
    density->add_option("--seed", de.seed);
    density->add_option("--workers", de.workers);

    Theorem8Opts t8;
    auto* theorem8 = app.add_subcommand("theorem8", "Deficiency-pair witnesses");
    theorem8->add_option("--j", t8.j)->required();
    theorem8->add_option("--k", t8.k)->required();
    theorem8->add_option("--n", t8.n)->required();
    theorem8->add_option("--fill", t8.fill, "full|random");
    theorem8->add_option("--samples", t8.samples, "estimate mode: sample count");
    theorem8->add_option("--seed", t8.seed);

    CatalogOpts ca;
    auto* cat = app.add_subcommand("catalog", "Named example sets");
    cat->add_option("--name", ca.name);

    RegressionOpts rg;
    auto* regression = app.add_subcommand("regression", "Run an expected-value manifest");
    regression->add_option("--manifest", rg.manifest)->required();

    std::vector<const char*> argv;
    argv.push_back("mstd");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return CliResult{0, app.help()};
    } catch (const CLI::ParseError& e) {
        ordered_json err{{"error", e.what()}};
        return CliResult{2, dump(err)};
    }

    try {
        if (analyze->parsed()) return do_analyze(an);
        if (construct->parsed()) return do_construct(co);
        if (reduce->parsed()) return do_reduce(re);
        if (repl->parsed()) return do_replicate(rp);
        if (search->parsed()) return do_search(se);
        if (density->parsed()) return do_density(de);
        if (theorem8->parsed()) return do_theorem8(t8);
        if (cat->parsed()) return do_catalog(ca);
        if (regression->parsed()) return do_regression(rg);
    } catch (const resource_limit_error& e) {
        ordered_json err{{"error", e.what()}};
        return CliResult{3, dump(err)};
    } catch (const validation_error& e) {
        ordered_json err{{"error", e.what()}};
        return CliResult{2, dump(err)};
    } catch (const std::exception& e) {
        ordered_json err{{"error", e.what()}};
        return CliResult{2, dump(err)};
    }
    ordered_json err{{"error", "no command given"}};
    return CliResult{2, dump(err)};
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliResult res = run_cli(args);
    std::cout << res.output;
    return res.exit_code;
}

} // namespace mstd
