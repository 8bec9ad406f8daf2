#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "tfc/bitset.hpp"

namespace tfc {

/// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    static Graph from_edges(std::size_t vertex_count,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);
    static Graph complete(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
    Bitset& mutable_neighbors(std::size_t v) { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const;
    bool is_symmetric() const;

private:
    std::vector<Bitset> rows_;
};

/// Vertex subset of a shared parent graph; degrees count members only.
class InducedSubgraph {
public:
    InducedSubgraph(std::shared_ptr<const Graph> parent, Bitset members);
    static InducedSubgraph whole(std::shared_ptr<const Graph> parent);

    const Graph& parent() const noexcept { return *parent_; }
    const std::shared_ptr<const Graph>& parent_ptr() const noexcept { return parent_; }
    const Bitset& members() const noexcept { return members_; }
    bool contains(std::size_t v) const { return members_.test(v); }
    std::size_t size() const noexcept { return size_; }
    std::vector<std::size_t> member_list() const { return members_.indices(); }

    std::size_t degree(std::size_t v) const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    std::size_t edge_count() const;
    /// |E| / |V| of the induced subgraph.
    double density() const;
    /// Members adjacent to v, plus v itself.
    Bitset closed_neighborhood(std::size_t v) const;

private:
    std::shared_ptr<const Graph> parent_;
    Bitset members_;
    std::size_t size_;
};

}  // namespace tfc
