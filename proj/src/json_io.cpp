#include "supersat/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "supersat/numeric.hpp"

namespace supersat {

json graph_to_json(const HostGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["r"] = g.uniformity();
    j["edges"] = g.edges();
    return j;
}

HostGraph graph_from_json(const json& j, std::vector<std::string>* warnings) {
    int n = j.at("n").get<int>();
    int r = j.value("r", 2);
    auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return HostGraph(n, r, std::move(edges), warnings);
}

HostGraph load_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    return graph_from_json(json::parse(read_text_file(path)), warnings);
}

json family_to_json(const BalancedFamily& fam, const HostGraph& g, const ScaleParams& p,
                    StopReason stop) {
    json j;
    j["format"] = "supersat-family-v1";
    j["pattern"] = fam.pattern.to_string();
    j["delta"] = p.delta;
    j["host"] = graph_to_json(g);
    json members = json::array();
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (const auto& m : fam.theta_members) {
            json jm;
            jm["endpoints"] = std::vector<int>{m.x, m.y};
            jm["paths"] = m.paths;
            members.push_back(std::move(jm));
        }
    } else {
        for (const auto& m : fam.rp_members) {
            json jm;
            jm["parts"] = m.parts;
            members.push_back(std::move(jm));
        }
    }
    j["members"] = std::move(members);

    json stats;
    stats["size"] = fam.size();
    stats["stop_reason"] = stop_reason_name(stop);
    json ledger_rows = json::array();
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        std::map<int, std::pair<long long, long long>> by_size; // entries, max degree
        for (const auto& [subset, degree] : fam.forest_ledger) {
            auto& slot = by_size[static_cast<int>(subset.size())];
            ++slot.first;
            slot.second = std::max(slot.second, degree);
        }
        for (const auto& [size, stats_pair] : by_size) {
            json row;
            row["forest_size"] = size;
            row["entries"] = stats_pair.first;
            row["max_degree"] = stats_pair.second;
            row["cap"] = forest_degree_cap(size, p);
            ledger_rows.push_back(std::move(row));
        }
    } else {
        std::map<std::vector<int>, std::pair<long long, long long>> by_profile;
        for (const auto& [tuple, degree] : fam.tuple_ledger) {
            std::vector<int> sizes;
            for (const auto& part : tuple) sizes.push_back(static_cast<int>(part.size()));
            auto& slot = by_profile[sizes];
            ++slot.first;
            slot.second = std::max(slot.second, degree);
        }
        for (const auto& [sizes, stats_pair] : by_profile) {
            json row;
            row["part_sizes"] = sizes;
            row["entries"] = stats_pair.first;
            row["max_degree"] = stats_pair.second;
            row["cap"] = tuple_degree_cap(sizes, p);
            ledger_rows.push_back(std::move(row));
        }
    }
    stats["ledger"] = std::move(ledger_rows);
    j["stats"] = std::move(stats);
    return j;
}

LoadedFamily family_from_json(const json& j) {
    PatternSpec pattern = PatternSpec::parse(j.at("pattern").get<std::string>());
    double delta = j.at("delta").get<double>();
    std::vector<std::string> warnings;
    HostGraph host = graph_from_json(j.at("host"), &warnings);
    ScaleParams params = ScaleParams::from_host(host, pattern, delta);

    LoadedFamily out{std::move(host), BalancedFamily{}, params};
    if (pattern.kind == PatternSpec::Kind::Theta) {
        std::vector<ThetaCopy> members;
        for (const auto& jm : j.at("members")) {
            ThetaCopy m;
            auto endpoints = jm.at("endpoints").get<std::vector<int>>();
            if (endpoints.size() != 2) throw std::invalid_argument("bad theta endpoints");
            m.x = endpoints[0];
            m.y = endpoints[1];
            m.paths = jm.at("paths").get<std::vector<std::vector<int>>>();
            std::set<EdgeId> ids;
            for (const auto& path : m.paths)
                for (size_t i = 0; i + 1 < path.size(); ++i) {
                    auto id = out.host.find_edge({path[i], path[i + 1]});
                    if (!id) throw std::invalid_argument("family member edge missing from host");
                    ids.insert(*id);
                }
            m.edge_ids = EdgeSubset(ids.begin(), ids.end());
            m.validate(out.host, pattern.a, pattern.b);
            members.push_back(std::move(m));
        }
        out.family = make_family(out.host, pattern, std::move(members));
    } else {
        std::vector<RPartiteCopy> members;
        for (const auto& jm : j.at("members")) {
            RPartiteCopy m;
            m.parts = jm.at("parts").get<std::vector<std::vector<int>>>();
            m.validate(out.host, pattern.profile);
            members.push_back(std::move(m));
        }
        out.family = make_family(out.host, pattern, std::move(members));
    }
    return out;
}

LoadedFamily load_family_file(const std::string& path) {
    return family_from_json(json::parse(read_text_file(path)));
}

json containers_to_json(const ContainerBuildResult& result) {
    json j;
    j["ok"] = result.ok;
    if (!result.ok) {
        j["error"] = result.error;
        return j;
    }
    j["eps"] = result.eps;
    j["tau"] = result.tau;
    j["delta_h_tau"] = result.delta_htau;
    j["count_bound"] = result.count_bound;
    j["eps_prime"] = result.eps_prime;
    j["ground_size"] = result.hypergraph.ground_size;
    j["member_count"] = result.hypergraph.hyperedges.size();
    json list = json::array();
    for (size_t i = 0; i < result.containers.size(); ++i) {
        json row;
        row["edges"] = result.containers[i];
        row["fingerprint"] = result.fingerprints[i];
        list.push_back(std::move(row));
    }
    j["containers"] = std::move(list);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace supersat
