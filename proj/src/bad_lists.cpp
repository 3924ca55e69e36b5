#include "spc/bad_lists.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <random>
#include <string>

#include "spc/errors.hpp"

namespace spc {

const ColourSet& BadPathSpec::block(const std::string& name) const {
    auto it = blocks.find(name);
    if (it == blocks.end()) throw PreconditionError("BadPathSpec: no block named " + name);
    return it->second;
}

BadPathList bad_path_layout(int l, int m, int e, const ColourSet& m1, const ColourSet& m2,
                            const ColourSet& used) {
    if (l < 2) throw PreconditionError("bad_path_layout: l must be >= 2");
    if (m < 1 || e < 1) throw PreconditionError("bad_path_layout: m and e must be positive");
    const int q = l / 2;
    if (m1.size() != m || m2.size() != m)
        throw PreconditionError("bad_path_layout: end pins must have exactly m colours");
    if (l == 2 && !m1.disjoint_with(m2))
        throw PreconditionError("bad_path_layout: l = 2 requires disjoint end pins");

    BadPathSpec spec;
    spec.l = l;
    spec.m = m;
    spec.e = e;
    spec.q = q;
    spec.m1 = m1;
    spec.m2 = m2;

    ColourSet occupied = used.unite(m1).unite(m2);
    auto alloc = [&](char prefix, int index, int size) {
        ColourSet block = fresh_colours(size, occupied);
        occupied = occupied.unite(block);
        spec.blocks.emplace(prefix + std::to_string(index), std::move(block));
    };

    // Named blocks: the A family runs one index further on odd-length paths,
    // where the second-to-last vertex still needs a fresh m-block.
    const int a_max = (l % 2 == 0) ? 2 * q - 3 : 2 * q - 1;
    for (int r = 1; r <= a_max; r += 2) alloc('A', r, m);
    for (int s = 2; s <= 2 * q - 2; s += 2) alloc('B', s, m);
    for (int t = 1; t <= 2 * q - 1; t += 2) alloc('Z', t, e);

    auto block = [&spec](char prefix, int index) -> const ColourSet& {
        return spec.block(prefix + std::to_string(index));
    };

    std::vector<ColourSet> lists(static_cast<std::size_t>(l) + 1);
    lists[0] = m1;
    lists[l] = m2;
    if (l == 2) {
        // both general clauses collapse onto v_1; the pin sets take over the
        // roles of the missing A/B blocks
        lists[1] = m1.unite(m2).unite(block('Z', 1));
    } else {
        lists[1] = m1.unite(block('A', 1)).unite(block('Z', 1));
        const int odd_rounds = (l % 2 == 0) ? q - 2 : q - 1;
        for (int i = 1; i <= odd_rounds; ++i)
            lists[2 * i + 1] =
                block('B', 2 * i).unite(block('A', 2 * i + 1)).unite(block('Z', 2 * i + 1));
        for (int i = 1; i <= q - 1; ++i)
            lists[2 * i] =
                block('B', 2 * i).unite(block('A', 2 * i - 1)).unite(block('Z', 2 * i - 1));
        if (l % 2 == 0)
            lists[2 * q - 1] = m2.unite(block('B', 2 * q - 2)).unite(block('Z', 2 * q - 1));
        else
            lists[2 * q] = m2.unite(block('A', 2 * q - 1)).unite(block('Z', 2 * q - 1));
    }

    for (int i = 1; i < l; ++i) {
        if (lists[i].size() != 2 * m + e)
            throw Error("bad_path_layout: interior list " + std::to_string(i) + " has size " +
                        std::to_string(lists[i].size()) + ", expected " +
                        std::to_string(2 * m + e) + " (construction bug)");
    }
    return BadPathList{std::move(lists), std::move(spec)};
}

BadPathList bad_path_list(int l, int m, int e, const ColourSet& m1, const ColourSet& m2,
                          const ColourSet& used) {
    const int q = l / 2;
    if (l >= 2 && m >= 1 && e >= 1 && q * e >= m)
        throw PreconditionError("bad_path_list: needs q*e < m (q = " + std::to_string(q) +
                                ", e = " + std::to_string(e) + ", m = " + std::to_string(m) +
                                "); with this much slack every pinned path is colourable");
    return bad_path_layout(l, m, e, m1, m2, used);
}

PrefixOverlapReport check_prefix_overlap(const BadPathList& bad, int j, long long budget) {
    const BadPathSpec& spec = bad.spec;
    if (spec.q < 2)
        throw PreconditionError("check_prefix_overlap: needs lists built with q >= 2");
    if (j < 2 || j > spec.q)
        throw PreconditionError("check_prefix_overlap: j must lie in 2..q");

    PrefixOverlapReport report;
    report.j = j;
    report.prefix_end = 2 * j - 2;
    report.bound = spec.m - (j - 1) * spec.e;

    const ColourSet& target_block = spec.block("B" + std::to_string(2 * j - 2));
    const int last = report.prefix_end;

    std::vector<std::vector<ColourSet>> choices(static_cast<std::size_t>(last) + 1);
    choices[0] = {spec.m1}; // |L(v_0)| = m forces the first set
    double estimate = 1.0;
    for (int pos = 1; pos <= last; ++pos) {
        choices[pos] = enumerate_m_subsets(bad.lists[pos], spec.m);
        estimate *= static_cast<double>(choices[pos].size());
    }

    long long count = 0;
    int min_overlap = INT_MAX;
    auto record = [&](const ColourSet& last_set) {
        ++count;
        min_overlap = std::min(min_overlap, last_set.intersect_size(target_block));
    };

    if (estimate <= static_cast<double>(budget)) {
        std::function<void(int, const ColourSet&)> walk = [&](int pos, const ColourSet& prev) {
            for (const ColourSet& choice : choices[pos]) {
                if (!choice.disjoint_with(prev)) continue;
                if (pos == last) record(choice);
                else walk(pos + 1, choice);
            }
        };
        walk(1, spec.m1);
    } else {
        // too many prefix colourings to exhaust: sample seeded random ones
        report.sampled = true;
        std::mt19937_64 rng(0xC1A1u + static_cast<std::uint64_t>(j));
        const int trials = 200'000;
        std::vector<const ColourSet*> viable;
        for (int trial = 0; trial < trials; ++trial) {
            const ColourSet* prev = &spec.m1;
            bool dead = false;
            for (int pos = 1; pos <= last && !dead; ++pos) {
                viable.clear();
                for (const ColourSet& choice : choices[pos])
                    if (choice.disjoint_with(*prev)) viable.push_back(&choice);
                if (viable.empty()) dead = true;
                else prev = viable[rng() % viable.size()];
            }
            if (!dead) record(*prev);
        }
    }

    report.colourings = count;
    report.vacuous = (count == 0);
    report.min_overlap = report.vacuous ? -1 : min_overlap;
    report.passes = report.vacuous || min_overlap >= report.bound;
    return report;
}

} // namespace spc
