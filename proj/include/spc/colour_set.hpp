#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spc {

using Colour = int;

// A finite set of colour identifiers kept sorted ascending, no duplicates.
class ColourSet {
public:
    ColourSet() = default;
    ColourSet(std::initializer_list<Colour> items);
    explicit ColourSet(std::vector<Colour> items);

    bool empty() const { return items_.empty(); }
    int size() const { return static_cast<int>(items_.size()); }
    bool contains(Colour c) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Colour>& values() const { return items_; }

    void insert(Colour c);

    ColourSet unite(const ColourSet& other) const;
    ColourSet minus(const ColourSet& other) const;
    ColourSet intersect(const ColourSet& other) const;
    int intersect_size(const ColourSet& other) const;
    bool disjoint_with(const ColourSet& other) const;
    bool subset_of(const ColourSet& other) const;

    // The n smallest elements; n must not exceed size().
    ColourSet take_smallest(int n) const;

    bool operator==(const ColourSet&) const = default;
    auto operator<=>(const ColourSet&) const = default;

private:
    std::vector<Colour> items_;
};

// All m-element subsets of s, in lexicographic order over the ascending
// element sequence. m outside [0, |s|] is rejected.
std::vector<ColourSet> enumerate_m_subsets(const ColourSet& s, int m);

// C(n, m); throws PreconditionError if the count does not fit in 63 bits.
std::uint64_t subset_count(int n, int m);

// The `count` smallest non-negative colours not present in `used`.
ColourSet fresh_colours(int count, const ColourSet& used);

} // namespace spc
