#include "spc/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

#include "spc/errors.hpp"

namespace spc {

namespace {

constexpr long long kMaxStatesPerVertex = 4'000'000;

// Colours remapped onto a dense range so subsets become bit masks.
class MaskSpace {
public:
    void add(const ColourSet& s) {
        for (Colour c : s.values()) colours_.push_back(c);
    }

    void freeze() {
        std::sort(colours_.begin(), colours_.end());
        colours_.erase(std::unique(colours_.begin(), colours_.end()), colours_.end());
        words_ = (colours_.size() + 63) / 64;
        if (words_ == 0) words_ = 1;
    }

    std::vector<std::uint64_t> mask(const ColourSet& s) const {
        std::vector<std::uint64_t> out(words_, 0);
        for (Colour c : s.values()) {
            auto it = std::lower_bound(colours_.begin(), colours_.end(), c);
            std::size_t idx = static_cast<std::size_t>(it - colours_.begin());
            out[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
        return out;
    }

    std::size_t words() const { return words_; }

private:
    std::vector<Colour> colours_;
    std::size_t words_ = 1;
};

bool masks_disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

void mask_or(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& other) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] |= other[i];
}

const ColourSet& list_at(const ListAssignment& lists, int v, const char* who) {
    auto it = lists.find(v);
    if (it == lists.end())
        throw PreconditionError(std::string(who) + ": no list for vertex " +
                                std::to_string(v));
    return it->second;
}

void guard_state_count(const ColourSet& list, int m, int v, const char* who) {
    if (subset_count(list.size(), m) > kMaxStatesPerVertex)
        throw PreconditionError(std::string(who) + ": list at vertex " + std::to_string(v) +
                                " yields more than " + std::to_string(kMaxStatesPerVertex) +
                                " m-subsets; instance too rich for exact search");
}

} // namespace

SolveOutcome solve_path_pinned_dp(const std::vector<int>& path, const ListAssignment& lists,
                                  int m, const ColourSet& s, const ColourSet& t) {
    if (path.size() < 2)
        throw PreconditionError("solve_path_pinned_dp: path needs at least two vertices");
    if (m < 1) throw PreconditionError("solve_path_pinned_dp: m must be positive");
    {
        std::unordered_set<int> seen(path.begin(), path.end());
        if (seen.size() != path.size())
            throw PreconditionError("solve_path_pinned_dp: path repeats a vertex");
    }
    if (s.size() != m || t.size() != m)
        throw PreconditionError("solve_path_pinned_dp: pins must have exactly m colours");
    if (!s.subset_of(list_at(lists, path.front(), "solve_path_pinned_dp")))
        throw PreconditionError("solve_path_pinned_dp: start pin not inside L(v_0)");
    if (!t.subset_of(list_at(lists, path.back(), "solve_path_pinned_dp")))
        throw PreconditionError("solve_path_pinned_dp: end pin not inside L(v_l)");

    const int last = static_cast<int>(path.size()) - 1;

    MaskSpace space;
    space.add(s);
    space.add(t);
    for (int i = 1; i < last; ++i) space.add(list_at(lists, path[i], "solve_path_pinned_dp"));
    space.freeze();

    // per-level states: the end levels are pinned to a single choice
    std::vector<std::vector<ColourSet>> states(path.size());
    states[0] = {s};
    states[last] = {t};
    for (int i = 1; i < last; ++i) {
        const ColourSet& list = list_at(lists, path[i], "solve_path_pinned_dp");
        if (list.size() < m) continue; // no m-subset exists; level stays empty
        guard_state_count(list, m, path[i], "solve_path_pinned_dp");
        states[i] = enumerate_m_subsets(list, m);
    }

    std::vector<std::vector<std::vector<std::uint64_t>>> masks(path.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        masks[i].reserve(states[i].size());
        for (const ColourSet& st : states[i]) masks[i].push_back(space.mask(st));
    }

    SolveOutcome outcome;
    // parent[i][b]: first (smallest) reachable predecessor state, or -1
    std::vector<std::vector<int>> parent(path.size());
    std::vector<char> reach_prev(1, 1);
    for (int level = 1; level <= last; ++level) {
        const auto& prev_masks = masks[level - 1];
        const auto& cur_masks = masks[level];
        parent[level].assign(cur_masks.size(), -1);
        std::vector<char> reach_cur(cur_masks.size(), 0);
        for (std::size_t b = 0; b < cur_masks.size(); ++b) {
            for (std::size_t a = 0; a < prev_masks.size(); ++a) {
                ++outcome.nodes;
                if (!reach_prev[a]) continue;
                if (masks_disjoint(prev_masks[a], cur_masks[b])) {
                    parent[level][b] = static_cast<int>(a);
                    reach_cur[b] = 1;
                    break;
                }
            }
        }
        reach_prev = std::move(reach_cur);
    }

    if (!reach_prev[0]) {
        outcome.kind = SolveOutcome::Kind::NoColouring;
        return outcome;
    }

    outcome.kind = SolveOutcome::Kind::Colouring;
    outcome.colouring.fold = m;
    int at = 0;
    for (int level = last; level >= 0; --level) {
        outcome.colouring.colours[path[level]] = states[level][at];
        if (level > 0) at = parent[level][at];
    }
    return outcome;
}

SolveOutcome solve_generic(const RealizedGraph& g, const ListAssignment& lists, int m,
                           long long budget) {
    if (m < 1) throw PreconditionError("solve_generic: m must be positive");
    if (budget < 1) throw PreconditionError("solve_generic: budget must be >= 1");

    SolveOutcome outcome;
    if (g.vertices.empty()) {
        outcome.kind = SolveOutcome::Kind::Colouring;
        outcome.colouring.fold = m;
        return outcome;
    }

    Adjacency adj(g);

    // breadth-first order from the highest-degree vertex, ties by smaller id;
    // repeats per component
    std::vector<int> order;
    order.reserve(g.vertices.size());
    {
        std::unordered_set<int> seen;
        while (order.size() < g.vertices.size()) {
            int start = -1;
            for (int v : g.vertices) {
                if (seen.count(v)) continue;
                if (start < 0 || adj.degree(v) > adj.degree(start)) start = v;
            }
            std::deque<int> queue{start};
            seen.insert(start);
            while (!queue.empty()) {
                int cur = queue.front();
                queue.pop_front();
                order.push_back(cur);
                for (int next : adj.neighbours(cur))
                    if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }

    MaskSpace space;
    for (int v : g.vertices) space.add(list_at(lists, v, "solve_generic"));
    space.freeze();

    std::map<int, std::vector<ColourSet>> choices;
    std::map<int, std::vector<std::vector<std::uint64_t>>> choice_masks;
    for (int v : g.vertices) {
        const ColourSet& list = list_at(lists, v, "solve_generic");
        if (list.size() < m) {
            outcome.kind = SolveOutcome::Kind::NoColouring;
            return outcome;
        }
        guard_state_count(list, m, v, "solve_generic");
        choices[v] = enumerate_m_subsets(list, m);
        auto& masks = choice_masks[v];
        masks.reserve(choices[v].size());
        for (const ColourSet& c : choices[v]) masks.push_back(space.mask(c));
    }

    std::map<int, int> picked; // vertex -> index into its choices
    bool out_of_budget = false;

    std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        std::vector<std::uint64_t> forbidden(space.words(), 0);
        for (int u : adj.neighbours(v)) {
            auto it = picked.find(u);
            if (it != picked.end()) mask_or(forbidden, choice_masks[u][it->second]);
        }
        const auto& masks = choice_masks[v];
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (++outcome.nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!masks_disjoint(masks[i], forbidden)) continue;
            picked[v] = static_cast<int>(i);
            if (descend(depth + 1)) return true;
            picked.erase(v);
            if (out_of_budget) return false;
        }
        return false;
    };

    if (descend(0)) {
        outcome.kind = SolveOutcome::Kind::Colouring;
        outcome.colouring.fold = m;
        for (const auto& [v, idx] : picked) outcome.colouring.colours[v] = choices[v][idx];
        return outcome;
    }
    outcome.kind =
        out_of_budget ? SolveOutcome::Kind::BudgetExceeded : SolveOutcome::Kind::NoColouring;
    return outcome;
}

} // namespace spc
