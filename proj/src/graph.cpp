#include "tfc/graph.hpp"

#include <algorithm>
#include <limits>

#include "tfc/errors.hpp"

namespace tfc {

Graph::Graph(std::size_t vertex_count) : rows_(vertex_count, Bitset(vertex_count)) {}

Graph Graph::from_edges(std::size_t vertex_count,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(std::size_t vertex_count) {
    Graph g(vertex_count);
    for (std::size_t u = 0; u < vertex_count; ++u)
        for (std::size_t v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

bool Graph::is_symmetric() const {
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        if (rows_[u].test(u)) return false;
        bool ok = true;
        rows_[u].for_each([&](std::size_t v) { ok = ok && rows_[v].test(u); });
        if (!ok) return false;
    }
    return true;
}

InducedSubgraph::InducedSubgraph(std::shared_ptr<const Graph> parent, Bitset members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    if (!parent_) throw InvalidArgument("induced subgraph needs a parent graph");
    if (members_.size() != parent_->vertex_count())
        throw InvalidArgument("member set size does not match parent graph");
    size_ = members_.count();
}

InducedSubgraph InducedSubgraph::whole(std::shared_ptr<const Graph> parent) {
    const std::size_t n = parent->vertex_count();
    return InducedSubgraph(std::move(parent), Bitset(n, true));
}

std::size_t InducedSubgraph::degree(std::size_t v) const {
    return parent_->neighbors(v).count_and(members_);
}

std::size_t InducedSubgraph::min_degree() const {
    if (size_ == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    members_.for_each([&](std::size_t v) { best = std::min(best, degree(v)); });
    return best;
}

std::size_t InducedSubgraph::max_degree() const {
    std::size_t best = 0;
    members_.for_each([&](std::size_t v) { best = std::max(best, degree(v)); });
    return best;
}

std::size_t InducedSubgraph::edge_count() const {
    std::size_t twice = 0;
    members_.for_each([&](std::size_t v) { twice += degree(v); });
    return twice / 2;
}

double InducedSubgraph::density() const {
    if (size_ == 0) return 0.0;
    return static_cast<double>(edge_count()) / static_cast<double>(size_);
}

Bitset InducedSubgraph::closed_neighborhood(std::size_t v) const {
    Bitset out = parent_->neighbors(v);
    out &= members_;
    out.set(v);
    return out;
}

}  // namespace tfc
