#include "spiderkeep/vertex_set.hpp"

#include <algorithm>

namespace spiderkeep {

VertexSet::VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : values_(std::move(vs)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) values_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it != values_.end() && *it == v) values_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(),
                         values_.begin(), values_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = values_.begin();
    auto b = other.values_.begin();
    while (a != values_.end() && b != other.values_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    out += '}';
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

}  // namespace spiderkeep
