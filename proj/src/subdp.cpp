#include "tfc/subdp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "tfc/errors.hpp"
#include "tfc/tfgraph.hpp"

namespace tfc {

namespace {

/// Decides whether a small graph (<= 32 vertices, closed neighborhoods as
/// bitmasks over local indices) admits a partition into k dominating sets.
class DomaticSearch {
public:
    explicit DomaticSearch(std::vector<std::uint32_t> closed) : closed_(std::move(closed)) {
        const std::size_t m = closed_.size();
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(closed_[a]) > std::popcount(closed_[b]);
        });
        neighbors_.resize(m);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t u = 0; u < m; ++u)
                if ((closed_[v] >> u) & 1u) neighbors_[v].push_back(u);
    }

    /// On success fills `classes` with 0-based class indices.
    bool solve(int k, std::vector<int>& classes) {
        const std::size_t m = closed_.size();
        k_ = k;
        cls_.assign(m, -1);
        cover_.assign(m * static_cast<std::size_t>(k), 0);
        missing_.assign(m, k);
        free_.resize(m);
        for (std::size_t u = 0; u < m; ++u) {
            free_[u] = std::popcount(closed_[u]);
            if (missing_[u] > free_[u]) return false;
        }
        if (!recurse(0, 0)) return false;
        classes = cls_;
        return true;
    }

private:
    bool recurse(std::size_t pos, int used) {
        if (pos == order_.size()) return true;
        const std::size_t v = order_[pos];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (assign(v, c) && recurse(pos + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    /// Returns false when some neighbor can no longer see every class.
    bool assign(std::size_t v, int c) {
        cls_[v] = c;
        bool ok = true;
        for (auto u : neighbors_[v]) {
            --free_[u];
            if (cover_[u * k_ + c]++ == 0) --missing_[u];
            if (missing_[u] > free_[u]) ok = false;
        }
        return ok;
    }

    void unassign(std::size_t v, int c) {
        cls_[v] = -1;
        for (auto u : neighbors_[v]) {
            ++free_[u];
            if (--cover_[u * k_ + c] == 0) ++missing_[u];
        }
    }

    std::vector<std::uint32_t> closed_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> neighbors_;
    int k_ = 0;
    std::vector<int> cls_;
    std::vector<int> cover_;
    std::vector<int> missing_;
    std::vector<int> free_;
};

std::vector<std::uint32_t> local_closed_masks(const InducedSubgraph& g,
                                              const std::vector<std::size_t>& members) {
    std::vector<std::uint32_t> closed(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i == j || g.parent().adjacent(members[i], members[j])) closed[i] |= 1u << j;
    return closed;
}

DomaticPartition make_partition(const InducedSubgraph& g, const std::vector<std::size_t>& members,
                                const std::vector<int>& local_classes, int class_count) {
    DomaticPartition part{g, class_count, std::vector<int>(g.parent().vertex_count(), 0)};
    for (std::size_t i = 0; i < members.size(); ++i) part.assignment[members[i]] = local_classes[i] + 1;
    return part;
}

/// Seeded random partition with local repair on a fixed member set.
class RepairSearch {
public:
    RepairSearch(const InducedSubgraph& g, std::uint64_t seed) : rng_(seed) {
        members_ = g.member_list();
        std::vector<std::size_t> local(g.parent().vertex_count(), 0);
        for (std::size_t i = 0; i < members_.size(); ++i) local[members_[i]] = i;
        closed_.resize(members_.size());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            g.closed_neighborhood(members_[i]).for_each(
                [&](std::size_t v) { closed_[i].push_back(static_cast<std::uint32_t>(local[v])); });
        }
    }

    const std::vector<std::size_t>& members() const noexcept { return members_; }

    struct Outcome {
        bool complete = false;
        /// Valid partition after dropping non-dominating classes (0-based).
        std::vector<int> classes;
        int class_count = 1;
    };

    Outcome attempt(int classes, int pass_cap) {
        const std::size_t m = members_.size();
        classes_ = classes;
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_);
        cls_.assign(m, 0);
        for (std::size_t j = 0; j < m; ++j) cls_[order[j]] = static_cast<int>(j % static_cast<std::size_t>(classes));

        cover_.assign(m * static_cast<std::size_t>(classes), 0);
        for (std::size_t v = 0; v < m; ++v)
            for (auto u : closed_[v]) ++cover_[u * classes + cls_[v]];
        class_gaps_.assign(static_cast<std::size_t>(classes), 0);
        uncovered_ = 0;
        for (std::size_t u = 0; u < m; ++u)
            for (int c = 0; c < classes; ++c)
                if (cover_[u * classes + c] == 0) {
                    ++uncovered_;
                    ++class_gaps_[static_cast<std::size_t>(c)];
                }

        std::vector<int> best_cls = cls_;
        int best_good = good_classes();
        std::vector<std::pair<std::uint32_t, int>> gaps;
        long fewest = uncovered_;
        int last_progress = 0;
        for (int pass = 0; pass < pass_cap && uncovered_ > 0 && pass - last_progress <= kStagnation; ++pass) {
            gaps.clear();
            for (std::size_t u = 0; u < m; ++u)
                for (int c = 0; c < classes; ++c)
                    if (cover_[u * classes + c] == 0) gaps.emplace_back(static_cast<std::uint32_t>(u), c);
            std::shuffle(gaps.begin(), gaps.end(), rng_);
            for (auto [u, c] : gaps)
                if (cover_[u * classes + c] == 0) repair(u, c);
            if (uncovered_ < fewest) {
                fewest = uncovered_;
                last_progress = pass;
            }
            const int good = good_classes();
            if (good > best_good) {
                best_good = good;
                best_cls = cls_;
            }
        }
        if (uncovered_ == 0) return {true, cls_, classes};
        return complete_greedily(best_cls);
    }

private:
    static constexpr std::size_t kCandidates = 12;
    /// Passes without a new minimum of uncovered pairs before giving up.
    static constexpr int kStagnation = 25;

    int good_classes() const {
        return static_cast<int>(std::count(class_gaps_.begin(), class_gaps_.end(), 0));
    }

    /// Moves one closed neighbor of u into class c, preferring moves that
    /// close more gaps than they open.
    void repair(std::uint32_t u, int c) {
        const auto& candidates = closed_[u];
        std::uint32_t chosen = 0;
        long best_score = std::numeric_limits<long>::min();
        int ties = 0;
        auto consider = [&](std::uint32_t w) {
            const int a = cls_[w];
            if (a == c) return;
            long score = 0;
            for (auto x : closed_[w]) {
                if (cover_[x * classes_ + c] == 0) ++score;
                if (cover_[x * classes_ + a] == 1) --score;
            }
            if (score > best_score) {
                best_score = score;
                chosen = w;
                ties = 1;
            } else if (score == best_score && std::uniform_int_distribution<int>(0, ties++)(rng_) == 0) {
                chosen = w;
            }
        };
        if (candidates.size() <= kCandidates) {
            for (auto w : candidates) consider(w);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            for (std::size_t i = 0; i < kCandidates; ++i) consider(candidates[pick(rng_)]);
        }
        if (best_score == std::numeric_limits<long>::min()) return;
        if (best_score < 0 && std::uniform_real_distribution<double>(0.0, 1.0)(rng_) > 0.1) return;
        move(chosen, c);
    }

    void move(std::uint32_t w, int to) {
        const int from = cls_[w];
        cls_[w] = to;
        for (auto x : closed_[w]) {
            if (--cover_[x * classes_ + from] == 0) {
                ++uncovered_;
                ++class_gaps_[static_cast<std::size_t>(from)];
            }
            if (cover_[x * classes_ + to]++ == 0) {
                --uncovered_;
                --class_gaps_[static_cast<std::size_t>(to)];
            }
        }
    }

    /// Recomputes coverage for `cls`, keeps dominating classes and folds the
    /// members of the others into the smallest dominating class.
    Outcome complete_greedily(const std::vector<int>& cls) const {
        const std::size_t m = members_.size();
        std::vector<int> cover(m * static_cast<std::size_t>(classes_), 0);
        for (std::size_t v = 0; v < m; ++v)
            for (auto u : closed_[v]) ++cover[u * classes_ + cls[v]];
        std::vector<int> renumber(static_cast<std::size_t>(classes_), -1);
        std::vector<std::size_t> sizes;
        for (int c = 0; c < classes_; ++c) {
            bool dominates = true;
            for (std::size_t u = 0; u < m && dominates; ++u) dominates = cover[u * classes_ + c] > 0;
            if (dominates) {
                renumber[static_cast<std::size_t>(c)] = static_cast<int>(sizes.size());
                sizes.push_back(0);
            }
        }
        Outcome out;
        out.classes.assign(m, 0);
        if (sizes.empty()) return out;
        for (std::size_t v = 0; v < m; ++v)
            if (renumber[static_cast<std::size_t>(cls[v])] >= 0) ++sizes[static_cast<std::size_t>(renumber[static_cast<std::size_t>(cls[v])])];
        for (std::size_t v = 0; v < m; ++v) {
            int r = renumber[static_cast<std::size_t>(cls[v])];
            if (r < 0) {
                r = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
                ++sizes[static_cast<std::size_t>(r)];
            }
            out.classes[v] = r;
        }
        out.class_count = static_cast<int>(sizes.size());
        return out;
    }

    std::mt19937_64 rng_;
    std::vector<std::size_t> members_;
    std::vector<std::vector<std::uint32_t>> closed_;
    int classes_ = 1;
    std::vector<int> cls_;
    std::vector<int> cover_;
    std::vector<int> class_gaps_;
    long uncovered_ = 0;
};

}  // namespace

std::size_t subdp_exact_cap() {
    if (const char* v = std::getenv("TFC_MAX_EXACT_VERTICES")) {
        try {
            const long cap = std::stol(v);
            if (cap > 0) return std::min<std::size_t>(static_cast<std::size_t>(cap), 30);
        } catch (const std::exception&) {
        }
    }
    return 20;
}

std::vector<std::vector<std::size_t>> DomaticPartition::classes() const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(std::max(class_count, 0)));
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] >= 1 && assignment[v] <= class_count)
            out[static_cast<std::size_t>(assignment[v] - 1)].push_back(v);
    return out;
}

std::string PartitionCheck::describe() const {
    if (valid) return "valid domatic partition";
    return "vertex " + std::to_string(uncovered_vertex) + " is not dominated by class " +
           std::to_string(missing_class);
}

PartitionCheck check_domatic_partition(const DomaticPartition& part) {
    const InducedSubgraph& g = part.graph;
    if (part.assignment.size() != g.parent().vertex_count())
        throw InvalidArgument("assignment must be indexed by parent vertex");
    if (part.class_count < 1) throw InvalidArgument("class count must be positive");
    for (std::size_t v = 0; v < part.assignment.size(); ++v) {
        const int c = part.assignment[v];
        if (g.contains(v) && (c < 1 || c > part.class_count))
            throw InvalidArgument("member " + std::to_string(v) + " has class " + std::to_string(c) +
                                  " outside [1, " + std::to_string(part.class_count) + "]");
        if (!g.contains(v) && c != 0)
            throw InvalidArgument("non-member " + std::to_string(v) + " carries a class");
    }
    PartitionCheck result;
    const std::size_t classes = static_cast<std::size_t>(part.class_count);
    g.members().for_each([&](std::size_t v) {
        if (!result.valid) return;
        std::vector<bool> seen(classes + 1, false);
        g.closed_neighborhood(v).for_each(
            [&](std::size_t u) { seen[static_cast<std::size_t>(part.assignment[u])] = true; });
        for (std::size_t c = 1; c <= classes; ++c) {
            if (!seen[c]) {
                result = {false, v, static_cast<int>(c)};
                return;
            }
        }
    });
    return result;
}

bool is_domatic_partition(const DomaticPartition& part) { return check_domatic_partition(part).valid; }

DomaticPartition domatic_number_exact(const InducedSubgraph& g) {
    if (g.size() == 0) throw InvalidArgument("domatic number of an empty graph");
    if (g.size() > kDomaticExactCap)
        throw ResourceLimit("domatic-exact-members", static_cast<long long>(kDomaticExactCap),
                            "exact domatic number limited to " + std::to_string(kDomaticExactCap) +
                                " members, got " + std::to_string(g.size()),
                            "use subdp_heuristic");
    const auto members = g.member_list();
    DomaticSearch search(local_closed_masks(g, members));
    const int upper = static_cast<int>(g.min_degree()) + 1;
    std::vector<int> best(members.size(), 0);
    int value = 1;
    std::vector<int> classes;
    for (int k = 2; k <= upper; ++k) {
        if (!search.solve(k, classes)) break;
        best = classes;
        value = k;
    }
    return make_partition(g, members, best, value);
}

SubDPResult subdp_exact(const std::shared_ptr<const Graph>& g) {
    const std::size_t n = g->vertex_count();
    if (n == 0) throw InvalidArgument("SubDP of an empty graph");
    const std::size_t cap = subdp_exact_cap();
    if (n > cap)
        throw ResourceLimit("subdp-exact-vertices", static_cast<long long>(cap),
                            "exact SubDP limited to " + std::to_string(cap) + " vertices, got " +
                                std::to_string(n),
                            "use subdp_heuristic");
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v) g->neighbors(v).for_each([&](std::size_t u) { adj[v] |= 1u << u; });

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::uint32_t best_mask = 1;
    std::vector<int> best_classes{0};
    int best = 1;
    for (std::uint32_t mask = full; mask != 0; --mask) {
        int min_deg = static_cast<int>(n);
        for (std::uint32_t rest = mask; rest && min_deg + 1 > best; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            min_deg = std::min(min_deg, std::popcount(adj[static_cast<std::size_t>(v)] & mask));
        }
        if (min_deg + 1 <= best) continue;

        std::vector<std::uint32_t> closed;
        std::vector<std::size_t> local(n, 0);
        std::vector<std::size_t> members;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            local[v] = members.size();
            members.push_back(v);
        }
        for (auto v : members) {
            std::uint32_t c = 1u << local[v];
            for (std::uint32_t rest = adj[v] & mask; rest; rest &= rest - 1)
                c |= 1u << local[static_cast<std::size_t>(std::countr_zero(rest))];
            closed.push_back(c);
        }
        DomaticSearch search(std::move(closed));
        std::vector<int> classes;
        for (int k = best + 1; k <= min_deg + 1; ++k) {
            if (!search.solve(k, classes)) break;
            best = k;
            best_mask = mask;
            best_classes = classes;
        }
    }

    Bitset members(n);
    for (std::uint32_t rest = best_mask; rest; rest &= rest - 1)
        members.set(static_cast<std::size_t>(std::countr_zero(rest)));
    InducedSubgraph sub(g, members);
    auto part = make_partition(sub, sub.member_list(), best_classes, best);
    return {best, sub, std::move(part), true};
}

namespace {

/// Members of g whose internal degree stays >= threshold after repeatedly
/// deleting vertices below it (the threshold-core).
Bitset degree_core(const InducedSubgraph& g, std::size_t threshold) {
    Bitset members = g.members();
    std::vector<std::size_t> degree(g.parent().vertex_count(), 0);
    std::vector<std::size_t> stack;
    members.for_each([&](std::size_t v) {
        degree[v] = g.degree(v);
        if (degree[v] < threshold) stack.push_back(v);
    });
    for (auto v : stack) members.reset(v);
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        g.parent().neighbors(v).for_each([&](std::size_t w) {
            if (members.test(w) && --degree[w] < threshold) {
                members.reset(w);
                stack.push_back(w);
            }
        });
    }
    return members;
}

}  // namespace

SubDPResult subdp_heuristic(const std::shared_ptr<const Graph>& g, HeuristicOptions opts) {
    if (g->vertex_count() == 0) throw InvalidArgument("SubDP of an empty graph");
    const InducedSubgraph whole = InducedSubgraph::whole(g);
    const InducedSubgraph core = whole.edge_count() > 0 ? prune_to_density_core(whole) : whole;

    int best = 1;
    InducedSubgraph best_graph = core;
    std::vector<int> best_classes(core.size(), 0);
    std::uint64_t seed = opts.seed;

    // Partitions one candidate subgraph. With `probe` set, first checks that
    // best + 1 classes are reachable at all; otherwise starts at the degree
    // bound. Then bisects between the best class count so far and the
    // smallest failure.
    auto search_in = [&](const InducedSubgraph& sub, bool probe) {
        int hi = static_cast<int>(sub.min_degree()) + 1;
        if (opts.target) hi = std::min(hi, *opts.target);
        if (hi <= best) return;
        RepairSearch search(sub, seed++);
        auto record = [&](const RepairSearch::Outcome& o) {
            if (o.class_count > best) {
                best = o.class_count;
                best_graph = sub;
                best_classes = o.classes;
            }
        };
        if (probe && best + 1 < hi) {
            auto first = search.attempt(best + 1, opts.pass_cap);
            record(first);
            if (!first.complete) return;
        }
        auto top = search.attempt(hi, opts.pass_cap);
        record(top);
        int failed = top.complete ? hi + 1 : hi;
        while (best + 1 < failed) {
            const int mid = best + (failed - best) / 2;
            auto o = search.attempt(mid, opts.pass_cap);
            record(o);
            if (!o.complete) failed = mid;
        }
    };

    // The density core first, then nested threshold-cores inside it, whose
    // larger minimum degree raises the degree bound. Thresholds grow by at
    // least 10% per step to bound the number of candidates.
    search_in(core, false);
    std::size_t threshold = core.min_degree() + 1;
    while (core.size() > 0) {
        InducedSubgraph inner(g, degree_core(core, threshold));
        if (inner.size() == 0) break;
        const std::size_t d = inner.min_degree();
        search_in(inner, true);
        threshold = std::max(d + 1, (d * 11 + 9) / 10);
    }

    auto part = make_partition(best_graph, best_graph.member_list(), best_classes, best);
    return {best, best_graph, std::move(part), false};
}

double rate_from_subdp(const SubDPResult& result, int n) {
    if (n < 1) throw InvalidArgument("word length n must be >= 1");
    return std::log2(static_cast<double>(result.value)) / n;
}

}  // namespace tfc
