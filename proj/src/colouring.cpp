#include "spc/colouring.hpp"

#include <sstream>

namespace spc {

namespace {

const char* kind_name(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::WrongFoldSize: return "wrong fold size";
    case Violation::Kind::NotInList: return "colour outside list";
    case Violation::Kind::EdgeOverlap: return "adjacent sets overlap";
    case Violation::Kind::UnknownVertex: return "unknown vertex";
    case Violation::Kind::MissingList: return "missing list";
    case Violation::Kind::ListTooSmall: return "list too small";
    }
    return "?";
}

} // namespace

std::string ValidityReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream out;
    for (const Violation& v : violations) {
        out << kind_name(v.kind) << " at vertex " << v.vertex;
        if (v.other >= 0) out << "-" << v.other;
        if (!v.detail.empty()) out << ": " << v.detail;
        out << "\n";
    }
    return out.str();
}

ValidityReport check_colouring(const RealizedGraph& g, const ListAssignment& lists,
                               const MultiColouring& phi, int m) {
    ValidityReport report;
    for (const auto& [v, set] : phi.colours) {
        if (!g.has_vertex(v)) {
            report.violations.push_back({Violation::Kind::UnknownVertex, v, -1, ""});
            continue;
        }
        if (set.size() != m)
            report.violations.push_back({Violation::Kind::WrongFoldSize, v, -1,
                                         "has " + std::to_string(set.size()) +
                                             " colours, expected " + std::to_string(m)});
        auto list = lists.find(v);
        if (list == lists.end())
            report.violations.push_back({Violation::Kind::MissingList, v, -1, ""});
        else if (!set.subset_of(list->second))
            report.violations.push_back({Violation::Kind::NotInList, v, -1, ""});
    }
    for (auto [u, v] : g.edges) {
        if (!phi.has(u) || !phi.has(v)) continue;
        if (!phi.at(u).disjoint_with(phi.at(v)))
            report.violations.push_back({Violation::Kind::EdgeOverlap, u, v, ""});
    }
    return report;
}

ValidityReport validate_list_sizes(const RealizedGraph& g, const ListAssignment& lists,
                                   const std::map<int, int>& required) {
    ValidityReport report;
    for (const auto& [v, bound] : required) {
        if (!g.has_vertex(v)) {
            report.violations.push_back({Violation::Kind::UnknownVertex, v, -1, ""});
            continue;
        }
        auto it = lists.find(v);
        if (it == lists.end()) {
            report.violations.push_back({Violation::Kind::MissingList, v, -1, ""});
        } else if (it->second.size() < bound) {
            report.violations.push_back({Violation::Kind::ListTooSmall, v, -1,
                                         "size " + std::to_string(it->second.size()) +
                                             " < required " + std::to_string(bound)});
        }
    }
    return report;
}

} // namespace spc
