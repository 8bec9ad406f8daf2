#pragma once

// Explicit transition-free graph G(p,q,n), degree statistics and the
// density-core pruning.

#include <memory>

#include "tfc/core.hpp"
#include "tfc/graph.hpp"
#include "tfc/pairgraph.hpp"

namespace tfc {

/// Largest n for explicit graphs. TFC_MAX_GRAPH_N overrides the default of 14.
int graph_cap();

struct BuildOptions {
    int cap = graph_cap();
    unsigned threads = 1;
};

/// G(p,q,n): vertex v is the word whose big-endian value is v; v ~ w iff
/// v != w and the words are transition free.
class TransitionFreeGraph {
public:
    TransitionFreeGraph(ForbiddenPair fp, int n, std::shared_ptr<const Graph> graph);

    const ForbiddenPair& fp() const noexcept { return fp_; }
    int n() const noexcept { return n_; }
    const Graph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_->vertex_count(); }

    BitWord word(std::size_t vertex) const { return BitWord(n_, vertex); }
    std::size_t vertex(const BitWord& w) const;

private:
    ForbiddenPair fp_;
    int n_;
    std::shared_ptr<const Graph> graph_;
};

TransitionFreeGraph build_graph(const ForbiddenPair& fp, int n, BuildOptions opts = {});

BigCount edge_count(const TransitionFreeGraph& g);
double edge_density(const TransitionFreeGraph& g);

/// Words b != a that are transition free with a. Dynamic program over the
/// bits of b; no graph is materialized.
BigCount degree_of_word(const BitWord& a, const ForbiddenPair& fp);

/// Minimum of degree_of_word over all 2^n words. n is limited to twice the
/// explicit-graph cap.
BigCount min_degree(const ForbiddenPair& fp, int n, unsigned threads = 1);

/// Repeatedly deletes a vertex of smallest internal degree (ties: lowest index)
/// while that degree is below the density |E|/|V| of the input. Every
/// surviving member has internal degree >= that density.
InducedSubgraph prune_to_density_core(const InducedSubgraph& g);
InducedSubgraph prune_to_density_core(const std::shared_ptr<const Graph>& g);

}  // namespace tfc
