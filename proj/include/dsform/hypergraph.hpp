#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dsform {

using Vertex = std::uint32_t;

/// A k-uniform hypergraph on vertices 1..n. Edges are stored sorted.
class Hypergraph {
public:
    /// Throws std::invalid_argument if an edge does not have exactly k
    /// distinct vertices in 1..n.
    Hypergraph(std::size_t vertex_count, std::size_t k, std::vector<std::vector<Vertex>> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t uniformity() const noexcept { return k_; }
    std::vector<std::vector<Vertex>> const& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// |e_i ∩ e_j|.
    std::size_t intersection(std::size_t i, std::size_t j) const;
    /// Largest intersection over all pairs of distinct edges (0 with < 2 edges).
    std::size_t max_pairwise_intersection() const;

private:
    std::size_t vertex_count_;
    std::size_t k_;
    std::vector<std::vector<Vertex>> edges_;
};

/// Colors are 1-based; colors[i] belongs to edge i.
struct EdgeColoring {
    std::size_t y = 0;
    std::vector<std::uint32_t> colors;
    std::size_t color_count = 0;
};

/// Colors edges in input order, each with the smallest color not used by an
/// earlier edge meeting it in exactly y vertices.
/// Requires 1 <= y < k; throws std::invalid_argument if two edges share more
/// than y vertices.
EdgeColoring greedy_edge_coloring(Hypergraph const& h, std::size_t y);

/// True iff no two edges meeting in exactly coloring.y vertices share a color.
bool coloring_is_proper(Hypergraph const& h, EdgeColoring const& coloring);

/// color_count <= k^y * n / y!, compared exactly in integers.
bool coloring_within_budget(Hypergraph const& h, EdgeColoring const& coloring);

}  // namespace dsform
