#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace spiderkeep {

// Sorted duplicate-free set of vertex labels. The sorted vector doubles as
// the canonical form: operator< is the lexicographic order used for every
// tie-break in the library.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs);
    explicit VertexSet(std::vector<int> vs);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    void clear() { values_.clear(); }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    const std::vector<int>& values() const { return values_; }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    std::string to_string() const;  // "{0,2,5}"

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> values_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

}  // namespace spiderkeep
