// supersat: construct and audit balanced copy families, run container
// steps and the counting pipeline, and cross-check everything against
// brute-force oracles at small scale.
//
// Exit codes: 0 success / audit pass, 1 audit failure, 2 usage or guard
// error.  All output is byte-deterministic for a fixed config and seed.

#include <cinttypes>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "supersat/container.hpp"
#include "supersat/enumerate.hpp"
#include "supersat/errors.hpp"
#include "supersat/greedy.hpp"
#include "supersat/json_io.hpp"
#include "supersat/numeric.hpp"
#include "supersat/oracle.hpp"
#include "supersat/pipeline.hpp"
#include "supersat/random_host.hpp"
#include "supersat/trend.hpp"

using namespace supersat;

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_text_file(out_path, text);
    }
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

std::string csv_header(const json& config) {
    return "# config " + config.dump() + "\n";
}

struct EnumArgs {
    std::string pattern, graph, out;
    bool count_only = false;
};

int run_enum(const EnumArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    std::vector<std::string> warnings;
    HostGraph g = load_graph_file(a.graph, &warnings);
    print_warnings(warnings);

    json config{{"subcommand", "enum"}, {"pattern", a.pattern}, {"graph", a.graph},
                {"count_only", a.count_only}};
    json out;
    out["config"] = config;
    if (pattern.kind == PatternSpec::Kind::Theta) {
        auto copies = enumerate_theta(g, pattern);
        out["count"] = copies.size();
        if (!a.count_only) {
            json list = json::array();
            for (const auto& c : copies) {
                json jc;
                jc["endpoints"] = std::vector<int>{c.x, c.y};
                jc["paths"] = c.paths;
                list.push_back(std::move(jc));
            }
            out["copies"] = std::move(list);
        }
    } else {
        auto copies = enumerate_rpartite(g, pattern.profile);
        out["count"] = copies.size();
        if (!a.count_only) {
            json list = json::array();
            for (const auto& c : copies) {
                json jc;
                jc["parts"] = c.parts;
                list.push_back(std::move(jc));
            }
            out["copies"] = std::move(list);
        }
    }
    emit(out.dump(2) + "\n", a.out);
    return 0;
}

struct BuildArgs {
    std::string pattern, graph, out;
    double delta = 1.0;
    double target = -1.0; // < 0: delta-scaled default
    std::optional<uint64_t> shuffle;
};

int run_build(const BuildArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    std::vector<std::string> warnings;
    HostGraph g = load_graph_file(a.graph, &warnings);
    print_warnings(warnings);
    ScaleParams p = ScaleParams::from_host(g, pattern, a.delta);

    double target = a.target;
    if (target < 0.0)
        target = pattern.kind == PatternSpec::Kind::Theta ? theta_build_target(p)
                                                          : rpartite_build_target(p);

    BuildResult r = pattern.kind == PatternSpec::Kind::Theta
                        ? build_theta_family(g, p, target, a.shuffle)
                        : build_rpartite_family(g, p, target, a.shuffle);

    json config{{"subcommand", "build"}, {"pattern", a.pattern}, {"graph", a.graph},
                {"delta", a.delta},      {"target", target}};
    config["shuffle"] = a.shuffle ? json(*a.shuffle) : json(nullptr);

    json out = family_to_json(r.family, g, p, r.stop);
    out["config"] = config;
    emit(out.dump(2) + "\n", a.out);
    if (r.stop == StopReason::VacuousParameters) {
        std::fprintf(stderr, "error: vacuous parameters (some floored cap is zero)\n");
        return 2;
    }
    return 0;
}

struct AuditArgs {
    std::string family, out;
    int link_sets = 8;
};

int run_audit(const AuditArgs& a) {
    LoadedFamily lf = load_family_file(a.family);
    const BalancedFamily& fam = lf.family;
    const ScaleParams& p = lf.params;
    const HostGraph& g = lf.host;
    PatternSpec pattern = fam.pattern;

    json config{{"subcommand", "audit"}, {"family", a.family}, {"link_sets", a.link_sets}};
    std::ostringstream os;
    os << csv_header(config);
    os << "check,detail,value,bound,pass\n";
    bool all_pass = true;
    auto row = [&](const std::string& check, const std::string& detail, const std::string& value,
                   const std::string& bound, bool pass) {
        os << check << "," << detail << "," << value << "," << bound << ","
           << (pass ? "pass" : "fail") << "\n";
        all_pass = all_pass && pass;
    };

    GoodnessReport good = audit_goodness(fam, p);
    row("goodness",
        good.good ? ""
                  : "first_violation_size_" +
                        std::to_string(pattern.kind == PatternSpec::Kind::Theta
                                           ? good.violating_subset.size()
                                           : good.violating_tuple.size()),
        std::to_string(good.degree), format_double(good.cap), good.good);
    if (pattern.kind == PatternSpec::Kind::Complete)
        row("entries_at_cap", "informational", std::to_string(good.entries_at_cap), "", true);

    if (pattern.kind == PatternSpec::Kind::Theta) {
        long long sum = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) sum += family_degree(fam, EdgeSubset{e});
        long long expect = pattern.edge_count() * fam.size();
        row("handshake", "singleton_degree_sum", std::to_string(sum), std::to_string(expect),
            sum == expect);
    } else {
        long long sum = 0;
        for (const auto& e : g.edges()) {
            std::vector<int> verts = e;
            std::sort(verts.begin(), verts.end());
            do {
                TupleQuery q;
                for (int v : verts) q.push_back({v});
                sum += family_degree(fam, q);
            } while (std::next_permutation(verts.begin(), verts.end()));
        }
        long long expect = pattern.edge_count() * fam.size();
        row("handshake", "ordered_transversal_sum", std::to_string(sum), std::to_string(expect),
            sum == expect);
    }

    {
        bool mono = true;
        if (pattern.kind == PatternSpec::Kind::Theta) {
            for (const auto& [subset, degree] : fam.forest_ledger) {
                if (subset.size() < 2) continue;
                for (size_t drop = 0; drop < subset.size() && mono; ++drop) {
                    EdgeSubset smaller;
                    for (size_t i = 0; i < subset.size(); ++i)
                        if (i != drop) smaller.push_back(subset[i]);
                    if (family_degree(fam, smaller) < degree) mono = false;
                }
                if (!mono) break;
            }
        } else {
            for (const auto& [tuple, degree] : fam.tuple_ledger) {
                for (size_t pi = 0; pi < tuple.size() && mono; ++pi) {
                    if (tuple[pi].size() < 2) continue;
                    TupleQuery smaller = tuple;
                    smaller[pi].pop_back();
                    if (family_degree(fam, smaller) < degree) mono = false;
                }
                if (!mono) break;
            }
        }
        row("monotonicity", "ledger", mono ? "ok" : "violated", "", mono);
    }

    SaturatedLedger sat = build_saturated_ledger(fam, p);
    row("saturated_entries", sat.degenerate ? "degenerate_floors" : "",
        std::to_string(pattern.kind == PatternSpec::Kind::Theta ? sat.forest_entries.size()
                                                                : sat.tuple_entries.size()),
        "", true);

    if (pattern.kind == PatternSpec::Kind::Theta && fam.size() > 0) {
        int a_pat = pattern.a, b_pat = pattern.b;
        double base = p.delta * std::pow(p.k, static_cast<double>(b_pat) / (b_pat - 1));
        bool ok = true;
        long long audited = 0;
        size_t limit = std::min<size_t>(fam.theta_members.size(), static_cast<size_t>(a.link_sets));
        for (size_t mi = 0; mi < limit && ok; ++mi) {
            const auto& edges = fam.theta_members[mi].edge_ids;
            for (unsigned mask = 1; mask < (1u << edges.size()) && ok; ++mask) {
                EdgeSubset S;
                for (size_t i = 0; i < edges.size(); ++i)
                    if (mask & (1u << i)) S.push_back(edges[i]);
                for (int j = 1; j <= a_pat * b_pat && ok; ++j) {
                    double bound =
                        std::pow(2.0, a_pat * b_pat + static_cast<double>(S.size()) + 1.0) *
                        std::pow(base, j);
                    long long size = static_cast<long long>(link_of(sat, S, j).size());
                    ++audited;
                    if (!count_within_cap(size, bound)) ok = false;
                }
            }
        }
        row("link_bound", "audited_" + std::to_string(audited), ok ? "ok" : "violated", "", ok);
    }
    if (pattern.kind == PatternSpec::Kind::Complete && fam.size() > 0) {
        bool ok = true;
        long long audited = 0;
        size_t limit = std::min<size_t>(fam.rp_members.size(), static_cast<size_t>(a.link_sets));
        const auto& prof = pattern.profile;
        for (size_t mi = 0; mi < limit && ok; ++mi) {
            const auto& parts = fam.rp_members[mi].parts;
            for (int i = 0; i < static_cast<int>(prof.size()) && ok; ++i) {
                auto blocked = blocked_part_vertices(sat, parts, i);
                double kexp = 1.0;
                for (int t = 0; t < i; ++t) kexp *= prof[static_cast<size_t>(t)];
                double tail = 1.0;
                for (size_t t = static_cast<size_t>(i); t + 1 < prof.size(); ++t) tail *= prof[t];
                double bound = p.bigK * p.delta * std::pow(p.k, kexp) *
                               std::pow(static_cast<double>(p.n), 1.0 - 1.0 / tail);
                ++audited;
                if (!count_within_cap(static_cast<long long>(blocked.size()), bound)) ok = false;
            }
        }
        row("x_set_bound", "audited_" + std::to_string(audited), ok ? "ok" : "violated", "", ok);
    }

    if (fam.size() > 0) {
        RatioReport ratio = degree_ratio_constant(fam, g, p, pattern.alpha());
        row("condition_ii_constant", "argmax_size_" + std::to_string(ratio.argmax.size()),
            format_double(ratio.constant), "", true);
    }

    os << "overall,,,," << (all_pass ? "pass" : "fail") << "\n";
    emit(os.str(), a.out);
    return all_pass ? 0 : 1;
}

struct ContainersArgs {
    std::string pattern, graph, family, out;
    double eps = 0.5;
    std::optional<double> tau;
    bool verify = true;
    int edge_guard = 18;
    int vertex_guard = 12;
};

int run_containers(const ContainersArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    std::vector<std::string> warnings;
    HostGraph g = load_graph_file(a.graph, &warnings);
    print_warnings(warnings);
    LoadedFamily lf = load_family_file(a.family);
    if (lf.host.edges() != g.edges())
        throw std::invalid_argument("family host does not match --graph");

    json config{{"subcommand", "containers"}, {"pattern", a.pattern}, {"graph", a.graph},
                {"family", a.family},         {"eps", a.eps},         {"verify", a.verify},
                {"edge_guard", a.edge_guard}, {"vertex_guard", a.vertex_guard}};
    config["tau"] = a.tau ? json(*a.tau) : json(nullptr);

    ContainerBuildResult res = build_containers(g, lf.family, lf.params, a.eps, a.tau);
    json out = containers_to_json(res);
    out["config"] = config;
    int code = 0;
    if (res.ok && a.verify && g.edge_count() <= a.edge_guard &&
        g.vertex_count() <= a.vertex_guard) {
        VerificationReport rep = verify_containers(res, g, pattern, a.edge_guard, a.vertex_guard);
        json jv;
        jv["coverage_ok"] = rep.coverage_ok;
        jv["fingerprint_ok"] = rep.fingerprint_ok;
        jv["spanning_ok"] = rep.spanning_ok;
        jv["count_ok"] = rep.count_ok;
        jv["nesting_ok"] = rep.nesting_ok;
        jv["free_subgraphs"] = rep.free_subgraphs;
        jv["pass"] = rep.pass();
        out["verification"] = std::move(jv);
        if (!rep.pass()) code = 1;
    }
    emit(out.dump(2) + "\n", a.out);
    if (!res.ok) {
        std::fprintf(stderr, "error: %s\n", res.error.c_str());
        return 2;
    }
    return code;
}

struct CountArgs {
    std::string pattern, out, family_mode = "greedy";
    int n = 4;
    double eps = 0.9;
    double k0 = 0.5;
    double delta = 1e-6;
    std::optional<double> tau;
    bool oracle = false;
    int edge_guard = 24;
};

int run_count(const CountArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    PipelineOptions opts;
    opts.delta = a.delta;
    opts.tau = a.tau;
    if (a.family_mode == "all")
        opts.family_mode = FamilyMode::AllCopies;
    else if (a.family_mode != "greedy")
        throw std::invalid_argument("--family-mode must be greedy or all");

    json config{{"subcommand", "count"},        {"pattern", a.pattern},
                {"n", a.n},                     {"eps", a.eps},
                {"k0", a.k0},                   {"delta", a.delta},
                {"family_mode", a.family_mode}, {"oracle", a.oracle},
                {"edge_guard", a.edge_guard}};
    config["tau"] = a.tau ? json(*a.tau) : json(nullptr);

    PipelineResult res = run_counting_pipeline(a.n, pattern, a.eps, a.k0, opts);
    std::ostringstream os;
    os << csv_header(config);
    os << "level,k_i,carried,replaced,kept_pattern_free,containers,max_edges,bound\n";
    for (const auto& lvl : res.levels)
        os << lvl.level << "," << format_double(lvl.k_i) << "," << lvl.carried << ","
           << lvl.replaced << "," << lvl.kept_pattern_free << "," << lvl.containers_after << ","
           << lvl.max_edges_after << "," << big_count_to_string(lvl.bound_after) << "\n";
    os << "completed," << (res.completed ? 1 : 0) << ",diagnostics,\"" << res.diagnostics
       << "\"\n";
    os << "bound,subgraph," << big_count_to_string(res.subgraph_bound) << "\n";
    os << "bound,sparse," << big_count_to_string(res.sparse_bound) << ",threshold,"
       << format_double(res.sparse_threshold) << "\n";

    int code = 0;
    if (a.oracle) {
        long long exact = count_free_graphs_exhaustive(a.n, pattern, a.edge_guard);
        bool sound = res.subgraph_bound >= static_cast<unsigned long long>(exact);
        bool covered = pipeline_coverage_exhaustive(res, pattern, a.n, a.edge_guard);
        os << "oracle,exact," << exact << ",bound_ge_exact," << (sound ? 1 : 0) << ",coverage,"
           << (covered ? 1 : 0) << "\n";
        if (!sound || !covered) code = 1;
    }
    emit(os.str(), a.out);
    return code;
}

struct OracleArgs {
    std::string pattern, out;
    int n = 4;
    int edge_guard = 24;
    int vertex_guard = 12;
};

int run_oracle(const OracleArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    json config{{"subcommand", "oracle"},
                {"pattern", a.pattern},
                {"n", a.n},
                {"edge_guard", a.edge_guard},
                {"vertex_guard", a.vertex_guard}};
    long long exact = count_free_graphs_exhaustive(a.n, pattern, a.edge_guard, a.vertex_guard);
    std::ostringstream os;
    os << csv_header(config);
    os << "count," << exact << "\n";
    emit(os.str(), a.out);
    return 0;
}

struct TrendArgs {
    std::string pattern, hosts = "complete", out;
    int n_from = 4;
    int n_to = 8;
    double density = 1.0;
    uint64_t seed = 0;
    int vertex_guard = 12;
};

int run_trend(const TrendArgs& a) {
    PatternSpec pattern = PatternSpec::parse(a.pattern);
    if (a.n_to > a.vertex_guard)
        throw GuardError("trend series exceeds vertex guard (" + std::to_string(a.vertex_guard) +
                         ")");
    std::vector<TrendRow> rows;
    if (a.hosts == "complete") {
        rows = trend_complete_series(pattern, a.n_from, a.n_to);
    } else if (a.hosts == "random") {
        rows = trend_random_series(pattern, a.n_from, a.n_to, a.density, a.seed);
    } else {
        throw std::invalid_argument("--hosts must be complete or random");
    }
    json config{{"subcommand", "trend"}, {"pattern", a.pattern}, {"hosts", a.hosts},
                {"n_from", a.n_from},    {"n_to", a.n_to},       {"density", a.density},
                {"seed", a.seed},        {"vertex_guard", a.vertex_guard}};
    std::ostringstream os;
    os << csv_header(config);
    os << "n,m,copies,benchmark,ratio,flag\n";
    for (const auto& r : rows)
        os << r.n << "," << r.m << "," << r.copies << "," << format_double(r.benchmark) << ","
           << format_double(r.ratio) << "," << (r.below_threshold ? "below_threshold" : "ok")
           << "\n";
    emit(os.str(), a.out);
    return 0;
}

struct RandomArgs {
    std::string out;
    int n = 8;
    int r = 2;
    long long m = -1;
    double p = -1.0;
    uint64_t seed = 0;
};

int run_random(const RandomArgs& a) {
    HostGraph g = a.m >= 0 ? random_host_exact(a.n, a.m, a.r, a.seed)
                           : random_host_binomial(a.n, a.p, a.r, a.seed);
    json config{{"subcommand", "random"}, {"n", a.n},       {"r", a.r},
                {"m", a.m},               {"p", a.p},       {"seed", a.seed}};
    json out = graph_to_json(g);
    out["config"] = config;
    emit(out.dump(2) + "\n", a.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced supersaturation families, containers and counting bounds"};
    app.require_subcommand(1);

    EnumArgs enum_args;
    auto* cmd_enum = app.add_subcommand("enum", "enumerate pattern copies in a host graph");
    cmd_enum->add_option("--pattern", enum_args.pattern, "theta:a,b or complete:a1,...,ar")
        ->required();
    cmd_enum->add_option("--graph", enum_args.graph, "host graph JSON file")->required();
    cmd_enum->add_flag("--count-only", enum_args.count_only, "emit only the count");
    cmd_enum->add_option("--out", enum_args.out, "output file (default stdout)");

    BuildArgs build_args;
    auto* cmd_build = app.add_subcommand("build", "greedily build a degree-capped family");
    cmd_build->add_option("--pattern", build_args.pattern)->required();
    cmd_build->add_option("--graph", build_args.graph)->required();
    cmd_build->add_option("--delta", build_args.delta, "cap constant")->required();
    cmd_build->add_option("--target", build_args.target,
                          "size target (default: delta-scaled)");
    uint64_t shuffle_seed = 0;
    auto* shuffle_opt =
        cmd_build->add_option("--shuffle", shuffle_seed, "shuffle scan order with this seed");
    cmd_build->add_option("--out", build_args.out);

    AuditArgs audit_args;
    auto* cmd_audit = app.add_subcommand("audit", "audit a family file");
    cmd_audit->add_option("--family", audit_args.family, "family JSON file")->required();
    cmd_audit->add_option("--link-sets", audit_args.link_sets,
                          "members whose edge subsets seed link/x-set audits");
    cmd_audit->add_option("--out", audit_args.out);

    ContainersArgs cont_args;
    auto* cmd_cont = app.add_subcommand("containers", "one container step over a family");
    cmd_cont->add_option("--pattern", cont_args.pattern)->required();
    cmd_cont->add_option("--graph", cont_args.graph)->required();
    cmd_cont->add_option("--family", cont_args.family)->required();
    cmd_cont->add_option("--eps", cont_args.eps)->required();
    double tau_value = 0.0;
    auto* tau_opt = cmd_cont->add_option("--tau", tau_value, "override the default tau");
    cmd_cont->add_flag("!--no-verify", cont_args.verify, "skip exhaustive verification");
    cmd_cont->add_option("--edge-guard", cont_args.edge_guard);
    cmd_cont->add_option("--vertex-guard", cont_args.vertex_guard);
    cmd_cont->add_option("--out", cont_args.out);

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "iterated container counting bound");
    cmd_count->add_option("--pattern", count_args.pattern)->required();
    cmd_count->add_option("--n", count_args.n)->required();
    cmd_count->add_option("--eps", count_args.eps)->required();
    cmd_count->add_option("--k0", count_args.k0)->required();
    cmd_count->add_option("--delta", count_args.delta);
    double count_tau = 0.0;
    auto* count_tau_opt = cmd_count->add_option("--tau", count_tau);
    cmd_count->add_option("--family-mode", count_args.family_mode, "greedy or all");
    cmd_count->add_flag("--oracle", count_args.oracle, "compare against the exact count");
    cmd_count->add_option("--edge-guard", count_args.edge_guard);
    cmd_count->add_option("--out", count_args.out);

    OracleArgs oracle_args;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact pattern-free graph count");
    cmd_oracle->add_option("--pattern", oracle_args.pattern)->required();
    cmd_oracle->add_option("--n", oracle_args.n)->required();
    cmd_oracle->add_option("--edge-guard", oracle_args.edge_guard);
    cmd_oracle->add_option("--vertex-guard", oracle_args.vertex_guard);
    cmd_oracle->add_option("--out", oracle_args.out);

    TrendArgs trend_args;
    auto* cmd_trend = app.add_subcommand("trend", "supersaturation trend table");
    cmd_trend->add_option("--pattern", trend_args.pattern)->required();
    cmd_trend->add_option("--hosts", trend_args.hosts, "complete or random");
    cmd_trend->add_option("--n-from", trend_args.n_from);
    cmd_trend->add_option("--n-to", trend_args.n_to);
    cmd_trend->add_option("--density", trend_args.density,
                          "random hosts: m = density * edge scale");
    cmd_trend->add_option("--seed", trend_args.seed);
    cmd_trend->add_option("--vertex-guard", trend_args.vertex_guard);
    cmd_trend->add_option("--out", trend_args.out);

    RandomArgs random_args;
    auto* cmd_random = app.add_subcommand("random", "emit a seeded random host graph");
    cmd_random->add_option("--n", random_args.n)->required();
    cmd_random->add_option("--r", random_args.r);
    cmd_random->add_option("--m", random_args.m, "exact edge count");
    cmd_random->add_option("--p", random_args.p, "binomial edge probability");
    cmd_random->add_option("--seed", random_args.seed);
    cmd_random->add_option("--out", random_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_enum) return run_enum(enum_args);
        if (*cmd_build) {
            if (*shuffle_opt) build_args.shuffle = shuffle_seed;
            return run_build(build_args);
        }
        if (*cmd_audit) return run_audit(audit_args);
        if (*cmd_cont) {
            if (*tau_opt) cont_args.tau = tau_value;
            return run_containers(cont_args);
        }
        if (*cmd_count) {
            if (*count_tau_opt) count_args.tau = count_tau;
            return run_count(count_args);
        }
        if (*cmd_oracle) return run_oracle(oracle_args);
        if (*cmd_trend) return run_trend(trend_args);
        if (*cmd_random) return run_random(random_args);
    } catch (const GuardError& e) {
        std::fprintf(stderr, "guard error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
