#pragma once

// Rate bounds from the edge-density growth rate, and per-n rate tables.

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfc/core.hpp"
#include "tfc/pairgraph.hpp"

namespace tfc {

/// log2 of the golden ratio: growth rate of the minimum degree of
/// G(10,01,n), hence the ceiling for codes built on the whole graph.
inline const double kStatelessCeiling = std::log2((1.0 + std::sqrt(5.0)) / 2.0);

struct RateBounds {
    double alpha = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double comparison_stateless = kStatelessCeiling;
};

/// [alpha, (1 + alpha) / 2]. Requires alpha > 0.
RateBounds theorem1_bounds(double alpha);

struct TableOptions {
    std::uint64_t seed = 1;
    double tol = 1e-12;
    unsigned threads = 1;
    /// Largest n for which the SubDP heuristic runs.
    int heuristic_cap = 10;
    /// Largest n for the exhaustive minimum-degree scan.
    int min_degree_cap = 20;
};

struct RateRow {
    int n = 0;
    BigCount pairs;
    BigCount edges;
    double density = 0.0;
    std::optional<BigCount> min_degree;
    /// log2(density) / n; empty when the graph has no edges.
    std::optional<double> alpha_estimate;
    std::optional<int> subdp;
    bool subdp_exact = false;
    std::optional<double> rate;
    /// Cells skipped because of a size cap.
    std::vector<std::string> limits;
};

struct RateTable {
    ForbiddenPair fp;
    double alpha = 0.0;
    RateBounds bounds;
    std::vector<RateRow> rows;
};

RateTable rate_table(const ForbiddenPair& fp, std::span<const int> n_values, TableOptions opts = {});

}  // namespace tfc
