#include "dsform/hypergraph.hpp"

#include "dsform/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dsform {

Hypergraph::Hypergraph(std::size_t vertex_count, std::size_t k, std::vector<std::vector<Vertex>> edges)
    : vertex_count_(vertex_count), k_(k), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e.size() != k_) throw std::invalid_argument("edge size differs from uniformity");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge repeats a vertex");
        if (!e.empty() && (e.front() == 0 || e.back() > vertex_count_))
            throw std::invalid_argument("edge vertex out of range 1.." + std::to_string(vertex_count_));
    }
}

std::size_t Hypergraph::intersection(std::size_t i, std::size_t j) const {
    auto const& a = edges_[i];
    auto const& b = edges_[j];
    std::size_t count = 0;
    for (std::size_t x = 0, z = 0; x < a.size() && z < b.size();) {
        if (a[x] < b[z]) {
            ++x;
        } else if (b[z] < a[x]) {
            ++z;
        } else {
            ++count;
            ++x;
            ++z;
        }
    }
    return count;
}

std::size_t Hypergraph::max_pairwise_intersection() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j) best = std::max(best, intersection(i, j));
    return best;
}

EdgeColoring greedy_edge_coloring(Hypergraph const& h, std::size_t y) {
    if (y < 1 || y >= h.uniformity()) throw std::invalid_argument("greedy_edge_coloring requires 1 <= y < k");
    EdgeColoring out;
    out.y = y;
    out.colors.assign(h.edge_count(), 0);
    std::vector<bool> taken;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        taken.assign(out.color_count + 2, false);
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t const meet = h.intersection(i, j);
            if (meet > y)
                throw std::invalid_argument("edges " + std::to_string(j) + " and " + std::to_string(i) +
                                            " share more than y vertices");
            if (meet == y) taken[out.colors[j]] = true;
        }
        std::uint32_t color = 1;
        while (taken[color]) ++color;
        out.colors[i] = color;
        out.color_count = std::max<std::size_t>(out.color_count, color);
    }
    return out;
}

bool coloring_is_proper(Hypergraph const& h, EdgeColoring const& coloring) {
    if (coloring.colors.size() != h.edge_count()) return false;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (std::size_t j = i + 1; j < h.edge_count(); ++j)
            if (coloring.colors[i] == coloring.colors[j] && h.intersection(i, j) == coloring.y) return false;
    return true;
}

bool coloring_within_budget(Hypergraph const& h, EdgeColoring const& coloring) {
    // color_count * y! <= k^y * n
    return coloring.color_count * factorial(coloring.y) <=
           ipow(h.uniformity(), coloring.y) * h.vertex_count();
}

}  // namespace dsform
