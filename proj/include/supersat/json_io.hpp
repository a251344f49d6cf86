#ifndef SUPERSAT_JSON_IO_HPP
#define SUPERSAT_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "supersat/balanced_family.hpp"
#include "supersat/container.hpp"
#include "supersat/greedy.hpp"
#include "supersat/host_graph.hpp"

namespace supersat {

using json = nlohmann::ordered_json;

// {"n": int, "r": int, "edges": [[v,...],...]}, 0-based vertices; edges
// are sorted and deduplicated on load with one warning per duplicate.
json graph_to_json(const HostGraph& g);
HostGraph graph_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
HostGraph load_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Family files embed pattern, delta, host and members so audits are
// self-contained; the ledger is recomputed on load.
json family_to_json(const BalancedFamily& fam, const HostGraph& g, const ScaleParams& p,
                    StopReason stop);

struct LoadedFamily {
    HostGraph host;
    BalancedFamily family;
    ScaleParams params;
};

LoadedFamily family_from_json(const json& j);
LoadedFamily load_family_file(const std::string& path);

json containers_to_json(const ContainerBuildResult& result);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace supersat

#endif
