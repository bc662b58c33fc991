#include "hornmodal/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornmodal {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.size();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    j["valuation"] = json::object();
    j["root"] = nullptr;
    return j;
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

json model_to_json(const KripkeModel& m) {
    json j = graph_to_json(m.graph);
    json val = json::object();
    for (const auto& [name, worlds] : m.valuation) val[name] = worlds;
    j["valuation"] = std::move(val);
    if (m.root)
        j["root"] = *m.root;
    else
        j["root"] = nullptr;
    return j;
}

KripkeModel model_from_json(const json& j) {
    KripkeModel m;
    m.graph = graph_from_json(j);
    if (j.contains("valuation")) {
        for (auto it = j.at("valuation").begin(); it != j.at("valuation").end(); ++it) {
            std::vector<int> worlds = it.value().get<std::vector<int>>();
            std::sort(worlds.begin(), worlds.end());
            for (int w : worlds)
                if (w < 0 || w >= m.graph.size())
                    throw std::invalid_argument("model json: valuation world out of range");
            m.valuation[it.key()] = std::move(worlds);
        }
    }
    if (j.contains("root") && !j.at("root").is_null()) m.root = j.at("root").get<int>();
    return m;
}

json types_list_to_json(const TypesList& t) {
    json j;
    j["refl"] = t.refl;
    j["symm"] = t.symm;
    j["trans"] = t.trans;
    return j;
}

json witness_to_json(const HomWitness& w) {
    json j;
    j["graph"] = graph_to_json(w.graph);
    j["levels"] = w.depth;
    json map = json::object();
    for (const auto& [var, vertex] : w.assignment) map[var] = vertex;
    j["map"] = std::move(map);
    return j;
}

json classification_to_json(const ClassificationOutcome& o) {
    json j;
    j["verdict"] = o.verdict == Verdict::NpComplete ? "NP-complete" : "PSPACE-hard";
    j["types_list"] = types_list_to_json(o.types);
    json trace = json::array();
    for (const auto& step : o.trace) {
        json s;
        s["clause"] = step.clause_index;
        s["case"] = to_string(step.kind);
        if (step.kind == StepCase::Transitive) s["k"] = step.k;
        if (!step.witnesses.empty()) {
            s["witness"] = witness_to_json(step.witnesses.front());
            if (step.witnesses.size() > 1) s["witness2"] = witness_to_json(step.witnesses[1]);
        }
        trace.push_back(std::move(s));
    }
    j["trace"] = std::move(trace);
    return j;
}

json sat_result_to_json(const SatResult& r) {
    json j;
    switch (r.status) {
    case SatStatus::Sat: j["status"] = "sat"; break;
    case SatStatus::UnsatWithinBound: j["status"] = "unsat-within-bound"; break;
    case SatStatus::Unsat: j["status"] = "unsat"; break;
    }
    j["engine"] = r.engine == Engine::Oracle ? "oracle" : "tableau";
    if (r.status == SatStatus::UnsatWithinBound) j["bound"] = r.bound;
    if (r.model) {
        j["model"] = model_to_json(*r.model);
        j["world"] = r.world;
    }
    j["stats"] = {{"nodes_explored", r.stats.nodes_explored},
                  {"max_depth", r.stats.max_depth}};
    return j;
}

json unravel_to_json(const UnravelResult& u) {
    json j;
    j["tree"] = model_to_json(u.morphism.source);
    j["map"] = u.morphism.map;
    j["depth"] = u.depth;
    return j;
}

} // namespace hornmodal
