#include "spc/json_io.hpp"

#include <fstream>

#include "spc/errors.hpp"

namespace spc {

using nlohmann::json;

namespace {

ColourSet colour_set_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of colours", 0);
    std::vector<Colour> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_number_integer()) throw ParseError("colours must be integers", 0);
        out.push_back(item.get<Colour>());
    }
    return ColourSet(std::move(out));
}

int vertex_key(const std::string& key) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw ParseError("vertex key '" + key + "' is not an integer", 0);
    }
}

std::map<int, ColourSet> vertex_sets_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("expected an object keyed by vertex id", 0);
    std::map<int, ColourSet> out;
    for (const auto& [key, value] : j.items()) out[vertex_key(key)] = colour_set_from_json(value);
    return out;
}

json vertex_sets_to_json(const std::map<int, ColourSet>& sets) {
    json out = json::object();
    for (const auto& [v, set] : sets) out[std::to_string(v)] = set.values();
    return out;
}

} // namespace

json graph_to_json(const RealizedGraph& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (g.terminals) j["terminals"] = json::array({g.terminals->first, g.terminals->second});
    return j;
}

RealizedGraph graph_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw ParseError("graph JSON needs 'vertices' and 'edges'", 0);
        std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a [u, v] pair", 0);
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        std::optional<std::pair<int, int>> terminals;
        if (j.contains("terminals")) {
            const auto& t = j.at("terminals");
            if (!t.is_array() || t.size() != 2)
                throw ParseError("'terminals' must be an [x, y] pair", 0);
            terminals = {{t[0].get<int>(), t[1].get<int>()}};
        }
        return make_graph(std::move(vertices), std::move(edges), terminals);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what(), 0);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what(), 0);
    }
}

json lists_to_json(const ListAssignment& lists) {
    return json{{"lists", vertex_sets_to_json(lists)}};
}

ListAssignment lists_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("lists"))
            throw ParseError("list JSON needs a 'lists' object", 0);
        return vertex_sets_from_json(j.at("lists"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid lists JSON: ") + e.what(), 0);
    }
}

json colouring_to_json(const MultiColouring& phi) {
    return json{{"m", phi.fold}, {"colours", vertex_sets_to_json(phi.colours)}};
}

MultiColouring colouring_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("m") || !j.contains("colours"))
            throw ParseError("colouring JSON needs 'm' and 'colours'", 0);
        MultiColouring phi;
        phi.fold = j.at("m").get<int>();
        phi.colours = vertex_sets_from_json(j.at("colours"));
        return phi;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid colouring JSON: ") + e.what(), 0);
    }
}

json gadget_to_json(const GadgetBundle& bundle) {
    json j;
    j["graph"] = graph_to_json(bundle.graph);
    j["lists"] = vertex_sets_to_json(bundle.lists);
    j["X"] = bundle.x_list.values();
    j["Y"] = bundle.y_list.values();
    json pairing = json::array();
    for (const auto& entry : bundle.pairing) {
        pairing.push_back(json{{"S", entry.s.values()},
                               {"T", entry.t.values()},
                               {"path", entry.path}});
    }
    j["pairing"] = std::move(pairing);
    json blocks = json::object();
    for (const auto& [name, set] : bundle.blocks) blocks[name] = set.values();
    j["blocks"] = std::move(blocks);
    j["params"] = json{{"k", bundle.k}, {"m", bundle.m}, {"e", bundle.e},
                       {"q", bundle.q}, {"l", bundle.l}, {"p", bundle.p}};
    return j;
}

GadgetBundle gadget_from_json(const json& j) {
    try {
        GadgetBundle bundle;
        bundle.graph = graph_from_json(j.at("graph"));
        bundle.lists = vertex_sets_from_json(j.at("lists"));
        bundle.x_list = colour_set_from_json(j.at("X"));
        bundle.y_list = colour_set_from_json(j.at("Y"));
        for (const auto& entry : j.at("pairing")) {
            GadgetBundle::PairEntry pair;
            pair.s = colour_set_from_json(entry.at("S"));
            pair.t = colour_set_from_json(entry.at("T"));
            pair.path = entry.at("path").get<std::vector<int>>();
            bundle.pairing.push_back(std::move(pair));
        }
        if (j.contains("blocks"))
            for (const auto& [name, set] : j.at("blocks").items())
                bundle.blocks[name] = colour_set_from_json(set);
        const json& params = j.at("params");
        bundle.k = params.at("k").get<int>();
        bundle.m = params.at("m").get<int>();
        bundle.e = params.at("e").get<int>();
        bundle.q = params.at("q").get<int>();
        bundle.l = params.at("l").get<int>();
        bundle.p = params.at("p").get<long long>();
        return bundle;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid gadget JSON: ") + e.what(), 0);
    }
}

json certificate_to_json(const GadgetCertificate& cert) {
    json defects = json::array();
    for (const auto& d : cert.defects) {
        defects.push_back(json{{"S", d.s.values()},
                               {"T", d.t.values()},
                               {"witness", colouring_to_json(d.witness)}});
    }
    return json{{"pairs_checked", cert.pairs_checked},
                {"all_uncolourable", cert.all_uncolourable},
                {"defects", std::move(defects)},
                {"runtime_ms", cert.runtime_ms}};
}

json trace_to_json(const ChainTrace& trace) {
    json chains = json::array();
    for (const Chain& chain : trace.removed) chains.push_back(chain.vertices);
    return json{{"trace", std::move(chains)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << dump_json(j);
    if (!out) throw IoError("failed while writing " + path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace spc
