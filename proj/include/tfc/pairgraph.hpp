#pragma once

// Transition-free pair graph: the transfer matrix whose walks enumerate
// transition-free word pairs, exact pair counting and the growth rate of
// the edge density.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "tfc/core.hpp"

namespace tfc {

using BigCount = boost::multiprecision::cpp_int;

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigCount& value);

/// Adjacency of a directed graph on 2^(2k-2) states. State u carries the
/// interleaved label (a1,b1,...,a_{k-1},b_{k-1}) read as a big-endian integer.
class PairTransferMatrix {
public:
    static constexpr int kMaxK = 10;

    /// Builds from dense 0/1 rows. Rows must be dim x dim with dim = 2^(2k-2),
    /// and every edge must respect label overlap.
    PairTransferMatrix(int k, const std::vector<std::vector<int>>& entries);

    /// Every overlap-consistent transition allowed (no constraint).
    static PairTransferMatrix unconstrained(int k);

    int k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return successors_.size(); }

    bool entry(std::size_t from, std::size_t to) const;
    const std::vector<std::uint32_t>& successors(std::size_t from) const { return successors_[from]; }
    std::size_t out_degree(std::size_t from) const { return successors_[from].size(); }
    std::size_t edge_count() const;

    std::vector<std::vector<int>> dense() const;
    std::string state_label(std::size_t state) const;

private:
    friend PairTransferMatrix build_pair_graph(const ForbiddenPair& fp);
    PairTransferMatrix(int k, std::vector<std::vector<std::uint32_t>> successors);

    int k_;
    std::vector<std::vector<std::uint32_t>> successors_;
};

/// Edge u->v exists iff labels overlap and the k-position window spelled by
/// u followed by v's last bit pair is neither (p,q) nor (q,p).
PairTransferMatrix build_pair_graph(const ForbiddenPair& fp);

/// 1^T M^steps 1 in exact arithmetic.
BigCount count_walks(const PairTransferMatrix& m, long long steps);

/// N(p,q,n): ordered pairs (a,b) of n-bit words that are transition free.
BigCount count_pairs(const ForbiddenPair& fp, int n);

struct PowerIterationOptions {
    double tol = 1e-12;
    long long max_iterations = 1'000'000;
};

/// Perron root of a nonnegative matrix by power iteration on M + I.
double spectral_radius(const PairTransferMatrix& m, PowerIterationOptions opts = {});

/// log2(lambda_max / 2): growth rate of the edge density of G(p,q,n).
double alpha(const ForbiddenPair& fp, PowerIterationOptions opts = {});

/// log2(lambda_max): growth exponent of N(p,q,n).
double growth_rate_of_N(const ForbiddenPair& fp, PowerIterationOptions opts = {});

}  // namespace tfc
