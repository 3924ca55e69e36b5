#pragma once

#include <string>

#include <json.hpp>

#include "spc/colouring.hpp"
#include "spc/gadget.hpp"
#include "spc/graph.hpp"
#include "spc/sp_colouring.hpp"
#include "spc/verify.hpp"

namespace spc {

// Graph JSON:     {"vertices":[...], "edges":[[u,v],...], "terminals":[x,y]?}
// Lists JSON:     {"lists":{"<vertex>":[...]}}
// Colouring JSON: {"m":int, "colours":{"<vertex>":[...]}}
// Gadget JSON:    graph + lists + X/Y/pairing/blocks/params
// Certificate:    {"pairs_checked":p, "all_uncolourable":bool,
//                  "defects":[{"S":..,"T":..,"witness":{...}}], "runtime_ms":int}

nlohmann::json graph_to_json(const RealizedGraph& g);
RealizedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const nlohmann::json& j);

nlohmann::json colouring_to_json(const MultiColouring& phi);
MultiColouring colouring_from_json(const nlohmann::json& j);

nlohmann::json gadget_to_json(const GadgetBundle& bundle);
GadgetBundle gadget_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const GadgetCertificate& cert);

nlohmann::json trace_to_json(const ChainTrace& trace);

// File helpers. Readers throw ParseError on malformed JSON and IoError on
// filesystem trouble; the writer appends a trailing newline.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

std::string dump_json(const nlohmann::json& j); // 2-space indent + newline

} // namespace spc
