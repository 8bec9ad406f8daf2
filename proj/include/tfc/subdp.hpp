#pragma once

// Domatic partitions and the SubDP number: exact solvers for small graphs and
// a seeded prune-then-repair heuristic for larger ones.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfc/graph.hpp"

namespace tfc {

/// Largest member count for domatic_number_exact.
inline constexpr std::size_t kDomaticExactCap = 24;
/// Largest vertex count for subdp_exact. TFC_MAX_EXACT_VERTICES overrides 20.
std::size_t subdp_exact_cap();

/// Partition of an induced subgraph's members into classes 1..class_count.
/// assignment is indexed by parent vertex and holds 0 for non-members.
struct DomaticPartition {
    InducedSubgraph graph;
    int class_count = 0;
    std::vector<int> assignment;

    std::vector<std::vector<std::size_t>> classes() const;
};

struct PartitionCheck {
    bool valid = true;
    /// First member not dominated by some class, with that class.
    std::size_t uncovered_vertex = 0;
    int missing_class = 0;

    explicit operator bool() const noexcept { return valid; }
    std::string describe() const;
};

/// Throws InvalidArgument when the assignment's domain is not exactly the
/// member set or a class index is out of range.
PartitionCheck check_domatic_partition(const DomaticPartition& part);
bool is_domatic_partition(const DomaticPartition& part);

/// Exact domatic number with a witness. Branch and bound over class
/// assignments in descending-degree vertex order.
DomaticPartition domatic_number_exact(const InducedSubgraph& g);

struct SubDPResult {
    int value = 0;
    InducedSubgraph subgraph;
    DomaticPartition partition;
    bool exact = false;
};

/// Maximum domatic number over induced subgraphs, by pruned enumeration of
/// vertex subsets.
SubDPResult subdp_exact(const std::shared_ptr<const Graph>& g);

struct HeuristicOptions {
    /// Upper limit on the class count to try.
    std::optional<int> target;
    std::uint64_t seed = 0;
    int pass_cap = 200;
};

/// Density-core pruning followed by seeded random partitions with repair.
/// Always returns a valid partition; only optimality is heuristic.
SubDPResult subdp_heuristic(const std::shared_ptr<const Graph>& g, HeuristicOptions opts = {});

/// log2(value) / n.
double rate_from_subdp(const SubDPResult& result, int n);

}  // namespace tfc
