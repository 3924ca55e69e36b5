#include "spc/colour_set.hpp"

#include <algorithm>
#include <string>

#include "spc/errors.hpp"

namespace spc {

ColourSet::ColourSet(std::initializer_list<Colour> items) : items_(items) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

ColourSet::ColourSet(std::vector<Colour> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ColourSet::contains(Colour c) const {
    return std::binary_search(items_.begin(), items_.end(), c);
}

void ColourSet::insert(Colour c) {
    auto it = std::lower_bound(items_.begin(), items_.end(), c);
    if (it == items_.end() || *it != c) items_.insert(it, c);
}

ColourSet ColourSet::unite(const ColourSet& other) const {
    ColourSet out;
    out.items_.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

ColourSet ColourSet::minus(const ColourSet& other) const {
    ColourSet out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
    return out;
}

ColourSet ColourSet::intersect(const ColourSet& other) const {
    ColourSet out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out.items_));
    return out;
}

int ColourSet::intersect_size(const ColourSet& other) const {
    int count = 0;
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else { ++count; ++a; ++b; }
    }
    return count;
}

bool ColourSet::disjoint_with(const ColourSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return false;
    }
    return true;
}

bool ColourSet::subset_of(const ColourSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(),
                         items_.end());
}

ColourSet ColourSet::take_smallest(int n) const {
    if (n < 0 || n > size())
        throw PreconditionError("take_smallest: n = " + std::to_string(n) +
                                " out of range for set of size " + std::to_string(size()));
    ColourSet out;
    out.items_.assign(items_.begin(), items_.begin() + n);
    return out;
}

std::vector<ColourSet> enumerate_m_subsets(const ColourSet& s, int m) {
    const int n = s.size();
    if (m < 0 || m > n)
        throw PreconditionError("enumerate_m_subsets: m = " + std::to_string(m) +
                                " out of range for set of size " + std::to_string(n));
    std::vector<ColourSet> out;
    out.reserve(static_cast<std::size_t>(subset_count(n, m)));
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    const std::vector<Colour>& items = s.values();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<Colour> chosen(m);
        for (int i = 0; i < m; ++i) chosen[i] = items[idx[i]];
        out.push_back(ColourSet(std::move(chosen)));
        // advance the rightmost index that still has room
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

std::uint64_t subset_count(int n, int m) {
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    std::uint64_t result = 1;
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    for (int i = 1; i <= m; ++i) {
        // result * (n - m + i) / i stays integral at every step
        std::uint64_t next = result * static_cast<std::uint64_t>(n - m + i);
        if (next / static_cast<std::uint64_t>(n - m + i) != result || next >= cap)
            throw PreconditionError("subset_count: C(" + std::to_string(n) + "," +
                                    std::to_string(m) + ") overflows");
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

ColourSet fresh_colours(int count, const ColourSet& used) {
    if (count < 0) throw PreconditionError("fresh_colours: negative count");
    std::vector<Colour> out;
    out.reserve(count);
    Colour candidate = 0;
    while (static_cast<int>(out.size()) < count) {
        if (!used.contains(candidate)) out.push_back(candidate);
        ++candidate;
    }
    return ColourSet(std::move(out));
}

} // namespace spc
