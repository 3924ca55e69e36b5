#include "spc/path_colouring.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "spc/errors.hpp"

namespace spc {

int tset_threshold(int m, int e, int j) {
    int needed = m - (j / 2) * e;
    return needed > 0 ? needed : 0;
}

TSetCertificate build_t_sets(const std::vector<ColourSet>& path_lists, int m, int e) {
    if (m < 1 || e < 1)
        throw PreconditionError("build_t_sets: m and e must be positive");
    if (path_lists.empty())
        throw PreconditionError("build_t_sets: empty list family");
    if (path_lists[0].size() != m)
        throw PreconditionError("build_t_sets: first list must have exactly m = " +
                                std::to_string(m) + " colours, has " +
                                std::to_string(path_lists[0].size()));

    const int interior_size = 2 * m + e;
    TSetCertificate cert;
    cert.m = m;
    cert.e = e;
    cert.lists.reserve(path_lists.size());
    cert.lists.push_back(path_lists[0]);
    for (std::size_t j = 1; j < path_lists.size(); ++j) {
        if (path_lists[j].size() < interior_size)
            throw PreconditionError("build_t_sets: list at position " + std::to_string(j) +
                                    " has " + std::to_string(path_lists[j].size()) +
                                    " colours, needs at least " +
                                    std::to_string(interior_size));
        cert.lists.push_back(path_lists[j].take_smallest(interior_size));
    }

    cert.tsets.reserve(cert.lists.size());
    cert.tsets.push_back(cert.lists[0]); // T_0 = L(v_0)
    for (std::size_t j = 1; j < cert.lists.size(); ++j) {
        // odd positions reserve m+e colours, even positions m, always outside
        // the previous reservation; sizes work out because the previous set
        // has at most m+e colours inside a 2m+e list
        int want = (j % 2 == 1) ? m + e : m;
        cert.tsets.push_back(cert.lists[j].minus(cert.tsets[j - 1]).take_smallest(want));
    }
    return cert;
}

std::vector<ColourSet> extend_to_target(const TSetCertificate& cert, int j,
                                        const ColourSet& target) {
    if (j < 0 || j > cert.length())
        throw PreconditionError("extend_to_target: position " + std::to_string(j) +
                                " outside certificate of length " +
                                std::to_string(cert.length()));
    if (target.size() != cert.m)
        throw PreconditionError("extend_to_target: target must have exactly m colours");
    if (!target.subset_of(cert.lists[j]))
        throw PreconditionError("extend_to_target: target not drawn from the position's list");
    if (target.intersect_size(cert.tsets[j]) < tset_threshold(cert.m, cert.e, j))
        throw PreconditionError("extend_to_target: target meets the reservation set in fewer "
                                "than the required " +
                                std::to_string(tset_threshold(cert.m, cert.e, j)) +
                                " colours");

    std::vector<ColourSet> chosen(static_cast<std::size_t>(j) + 1);
    chosen[j] = target;
    for (int pos = j; pos >= 1; --pos) {
        const ColourSet& next = chosen[pos];
        int need = tset_threshold(cert.m, cert.e, pos - 1);
        ColourSet reserved = cert.tsets[pos - 1].minus(next);
        if (reserved.size() < need)
            throw Error("extend_to_target: reservation shortfall at position " +
                        std::to_string(pos - 1) + " (certificate invariants broken)");
        ColourSet pick = reserved.take_smallest(need);
        ColourSet rest = cert.lists[pos - 1].minus(next).minus(pick);
        if (rest.size() < cert.m - need)
            throw Error("extend_to_target: list exhausted at position " +
                        std::to_string(pos - 1) + " (certificate invariants broken)");
        chosen[pos - 1] = pick.unite(rest.take_smallest(cert.m - need));
    }
    return chosen;
}

namespace {

// Colours v_0..v_K (K odd) so that the last set avoids `pin`: builds the
// reservation sets, takes the threshold number of reserved colours for v_K
// outside the pin, pads to m, then runs the backward pass.
std::vector<ColourSet> extend_before_pin(const std::vector<ColourSet>& prefix_lists, int m,
                                         int e, const ColourSet& pin) {
    TSetCertificate cert = build_t_sets(prefix_lists, m, e);
    const int last = cert.length();
    int need = tset_threshold(m, e, last);
    ColourSet reserved = cert.tsets[last].minus(pin);
    if (reserved.size() < need)
        throw Error("extend_before_pin: reservation shortfall (slack precondition broken)");
    ColourSet pick = reserved.take_smallest(need);
    ColourSet rest = cert.lists[last].minus(pin).minus(pick);
    ColourSet target = pick.unite(rest.take_smallest(m - need));
    return extend_to_target(cert, last, target);
}

void require_distinct(const std::vector<int>& path, const char* who) {
    std::unordered_set<int> seen(path.begin(), path.end());
    if (seen.size() != path.size())
        throw PreconditionError(std::string(who) + ": path repeats a vertex");
}

const ColourSet& list_at(const ListAssignment& lists, int v, const char* who) {
    auto it = lists.find(v);
    if (it == lists.end())
        throw PreconditionError(std::string(who) + ": no list for vertex " +
                                std::to_string(v));
    return it->second;
}

} // namespace

MultiColouring colour_path_pinned(const std::vector<int>& path, const ListAssignment& lists,
                                  int m, int e, const ColourSet& m1, const ColourSet& m2) {
    const int l = static_cast<int>(path.size()) - 1;
    if (l < 2) throw PreconditionError("colour_path_pinned: path length must be >= 2");
    if (m < 1 || e < 1) throw PreconditionError("colour_path_pinned: m and e must be positive");
    if ((l / 2) * e < m)
        throw PreconditionError("colour_path_pinned: slack too small, floor(l/2)*e = " +
                                std::to_string((l / 2) * e) + " < m = " + std::to_string(m));
    if (m1.size() != m || m2.size() != m)
        throw PreconditionError("colour_path_pinned: end pins must have exactly m colours");
    require_distinct(path, "colour_path_pinned");

    const int interior_size = 2 * m + e;
    std::vector<ColourSet> pos_lists(static_cast<std::size_t>(l) + 1);
    for (int i = 0; i <= l; ++i) pos_lists[i] = list_at(lists, path[i], "colour_path_pinned");
    if (pos_lists[0] != m1 || pos_lists[l] != m2)
        throw PreconditionError("colour_path_pinned: end lists must equal the pins");
    for (int i = 1; i < l; ++i) {
        if (pos_lists[i].size() < interior_size)
            throw PreconditionError("colour_path_pinned: interior list at vertex " +
                                    std::to_string(path[i]) + " has " +
                                    std::to_string(pos_lists[i].size()) +
                                    " colours, needs at least " +
                                    std::to_string(interior_size));
    }

    std::vector<ColourSet> chosen;
    if (l % 2 == 0) {
        std::vector<ColourSet> prefix(pos_lists.begin(), pos_lists.end() - 1);
        chosen = extend_before_pin(prefix, m, e, m2);
        chosen.push_back(m2);
    } else {
        // pre-pin v_{l-1} to an m-set avoiding m2, reducing to the even case
        ColourSet trunc = pos_lists[l - 1].take_smallest(interior_size);
        ColourSet bridge = trunc.minus(m2).take_smallest(m);
        std::vector<ColourSet> prefix(pos_lists.begin(), pos_lists.end() - 2);
        chosen = extend_before_pin(prefix, m, e, bridge);
        chosen.push_back(bridge);
        chosen.push_back(m2);
    }

    MultiColouring phi;
    phi.fold = m;
    for (int i = 0; i <= l; ++i) phi.colours[path[i]] = chosen[i];
    return phi;
}

MultiColouring colour_path_greedy(const std::vector<int>& path, const ListAssignment& lists,
                                  int m) {
    if (path.empty()) throw PreconditionError("colour_path_greedy: empty path");
    if (m < 1) throw PreconditionError("colour_path_greedy: m must be positive");
    require_distinct(path, "colour_path_greedy");

    MultiColouring phi;
    phi.fold = m;
    ColourSet prev;
    for (int v : path) {
        const ColourSet& list = list_at(lists, v, "colour_path_greedy");
        if (list.size() < 2 * m)
            throw PreconditionError("colour_path_greedy: list at vertex " + std::to_string(v) +
                                    " has " + std::to_string(list.size()) +
                                    " colours, needs at least " + std::to_string(2 * m));
        ColourSet choice = list.minus(prev).take_smallest(m);
        phi.colours[v] = choice;
        prev = std::move(choice);
    }
    return phi;
}

} // namespace spc
