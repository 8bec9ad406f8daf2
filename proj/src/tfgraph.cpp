#include "tfc/tfgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

int env_int(const char* name, int fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

/// Splits [0, total) into `threads` contiguous chunks and runs fn(begin, end).
template <class Fn>
void parallel_ranges(std::size_t total, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    if (threads == 1) {
        fn(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

template <class Count>
Count degree_dp(std::uint64_t a, int n, const ForbiddenPair& fp) {
    const int k = fp.k();
    if (n < k) return (Count(1) << n) - 1;
    const std::size_t states = std::size_t{1} << (k - 1);
    const std::uint64_t window_mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t p = fp.p().value();
    const std::uint64_t q = fp.q().value();
    std::vector<Count> cur(states, Count(1)), next(states);
    for (int end = k - 1; end < n; ++end) {
        // Window of a covering positions end-k+1..end (0-based from the left).
        const std::uint64_t aw = (a >> (n - 1 - end)) & window_mask;
        const bool a_is_p = aw == p;
        const bool a_is_q = aw == q;
        std::fill(next.begin(), next.end(), Count(0));
        for (std::size_t s = 0; s < states; ++s) {
            if (cur[s] == 0) continue;
            for (std::uint64_t bit = 0; bit < 2; ++bit) {
                const std::uint64_t bw = (static_cast<std::uint64_t>(s) << 1) | bit;
                if ((a_is_p && bw == q) || (a_is_q && bw == p)) continue;
                next[bw & (states - 1)] += cur[s];
            }
        }
        cur.swap(next);
    }
    Count total(0);
    for (const auto& c : cur) total += c;
    return total - 1;
}

}  // namespace

int graph_cap() { return env_int("TFC_MAX_GRAPH_N", 14); }

TransitionFreeGraph::TransitionFreeGraph(ForbiddenPair fp, int n, std::shared_ptr<const Graph> graph)
    : fp_(std::move(fp)), n_(n), graph_(std::move(graph)) {
    if (!graph_ || graph_->vertex_count() != (std::size_t{1} << n))
        throw InvalidArgument("transition-free graph must have 2^n vertices");
}

std::size_t TransitionFreeGraph::vertex(const BitWord& w) const {
    if (w.length() != n_) throw InvalidArgument("word length does not match graph");
    return static_cast<std::size_t>(w.value());
}

TransitionFreeGraph build_graph(const ForbiddenPair& fp, int n, BuildOptions opts) {
    if (n < 1) throw InvalidArgument("word length n must be >= 1");
    if (n > opts.cap || n > 30)
        throw ResourceLimit("graph-n", opts.cap,
                            "explicit graph limited to n <= " + std::to_string(opts.cap) +
                                ", got n = " + std::to_string(n),
                            "use pair-graph counting (count/alpha) or min_degree instead");
    const std::size_t size = std::size_t{1} << n;
    std::vector<WindowMasks> masks(size);
    for (std::size_t v = 0; v < size; ++v) masks[v] = window_masks(v, n, fp);

    auto graph = std::make_shared<Graph>(size);
    parallel_ranges(size, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
            auto& words = graph->mutable_neighbors(v).words();
            for (std::size_t w = 0; w < size; ++w)
                if (w != v && !masks_violate(masks[v], masks[w]))
                    words[w >> 6] |= std::uint64_t{1} << (w & 63);
        }
    });
    return TransitionFreeGraph(fp, n, std::move(graph));
}

BigCount edge_count(const TransitionFreeGraph& g) { return BigCount(g.graph().edge_count()); }

double edge_density(const TransitionFreeGraph& g) {
    return static_cast<double>(g.graph().edge_count()) / static_cast<double>(g.vertex_count());
}

BigCount degree_of_word(const BitWord& a, const ForbiddenPair& fp) {
    if (a.length() <= 62) return BigCount(degree_dp<std::uint64_t>(a.value(), a.length(), fp));
    return degree_dp<BigCount>(a.value(), a.length(), fp);
}

BigCount min_degree(const ForbiddenPair& fp, int n, unsigned threads) {
    if (n < 1) throw InvalidArgument("word length n must be >= 1");
    const int cap = 2 * graph_cap();
    if (n > cap)
        throw ResourceLimit("min-degree-n", cap,
                            "min_degree scans all 2^n words; limited to n <= " + std::to_string(cap),
                            "use degree_of_word on selected words");
    const std::size_t size = std::size_t{1} << n;
    threads = std::max(1u, threads);
    std::vector<std::uint64_t> partial(threads, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    const std::size_t chunk = (size + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) ranges.emplace_back(t * chunk, std::min(size, (t + 1) * chunk));
    parallel_ranges(threads, threads, [&](std::size_t tb, std::size_t te) {
        for (std::size_t t = tb; t < te; ++t)
            for (std::size_t v = ranges[t].first; v < ranges[t].second; ++v)
                partial[t] = std::min(partial[t], degree_dp<std::uint64_t>(v, n, fp));
    });
    return BigCount(*std::min_element(partial.begin(), partial.end()));
}

InducedSubgraph prune_to_density_core(const InducedSubgraph& g) {
    const std::size_t v_count = g.size();
    const std::size_t e_count = g.edge_count();
    if (e_count == 0) throw InvalidArgument("pruning needs a graph with at least one edge");

    Bitset members = g.members();
    std::vector<std::size_t> degree(g.parent().vertex_count(), 0);
    std::set<std::pair<std::size_t, std::size_t>> queue;
    members.for_each([&](std::size_t v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    });
    // Delete while degree < |E|/|V|, i.e. degree * |V| < |E|.
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        if (d * v_count >= e_count) break;
        queue.erase(queue.begin());
        members.reset(v);
        g.parent().neighbors(v).for_each([&](std::size_t w) {
            if (!members.test(w)) return;
            queue.erase({degree[w], w});
            --degree[w];
            queue.emplace(degree[w], w);
        });
    }
    return InducedSubgraph(g.parent_ptr(), std::move(members));
}

InducedSubgraph prune_to_density_core(const std::shared_ptr<const Graph>& g) {
    return prune_to_density_core(InducedSubgraph::whole(g));
}

}  // namespace tfc
