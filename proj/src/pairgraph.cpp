#include "tfc/pairgraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

std::size_t state_count(int k) { return std::size_t{1} << (2 * k - 2); }

void require_k(int k) {
    if (k < 2 || k > PairTransferMatrix::kMaxK)
        throw ResourceLimit("pair-graph-k", PairTransferMatrix::kMaxK,
                            "pair graph supports 2 <= k <= " +
                                std::to_string(PairTransferMatrix::kMaxK) + ", got " +
                                std::to_string(k),
                            "use a shorter forbidden pattern");
}

/// Overlap rule: the last 2k-4 label bits of `from` lead the label of `to`.
bool overlaps(int k, std::size_t from, std::size_t to) {
    const std::size_t tail = (state_count(k) >> 2) - 1;
    return (from & tail) == (to >> 2);
}

/// Splits an interleaved label of `pairs` bit pairs into its a and b tracks.
void deinterleave(std::size_t label, int pairs, std::uint64_t& a, std::uint64_t& b) {
    a = b = 0;
    for (int i = pairs - 1; i >= 0; --i) {
        a = (a << 1) | ((label >> (2 * i + 1)) & 1u);
        b = (b << 1) | ((label >> (2 * i)) & 1u);
    }
}

}  // namespace

double log2_big(const BigCount& value) {
    if (value <= 0) throw InvalidArgument("log2 of a non-positive count");
    const std::size_t msb = boost::multiprecision::msb(value);
    if (msb < 53) return std::log2(value.convert_to<double>());
    const std::size_t shift = msb - 52;
    const BigCount top = value >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

PairTransferMatrix::PairTransferMatrix(int k, std::vector<std::vector<std::uint32_t>> successors)
    : k_(k), successors_(std::move(successors)) {}

PairTransferMatrix::PairTransferMatrix(int k, const std::vector<std::vector<int>>& entries) : k_(k) {
    require_k(k);
    const std::size_t dim = state_count(k);
    if (entries.size() != dim) throw InvalidArgument("transfer matrix must have 2^(2k-2) rows");
    successors_.resize(dim);
    for (std::size_t u = 0; u < dim; ++u) {
        if (entries[u].size() != dim) throw InvalidArgument("transfer matrix must be square");
        for (std::size_t v = 0; v < dim; ++v) {
            const int e = entries[u][v];
            if (e != 0 && e != 1) throw InvalidArgument("transfer matrix entries must be 0 or 1");
            if (!e) continue;
            if (!overlaps(k, u, v))
                throw InvalidArgument("edge " + std::to_string(u) + "->" + std::to_string(v) +
                                      " violates label overlap");
            successors_[u].push_back(static_cast<std::uint32_t>(v));
        }
    }
}

PairTransferMatrix PairTransferMatrix::unconstrained(int k) {
    require_k(k);
    const std::size_t dim = state_count(k);
    std::vector<std::vector<std::uint32_t>> succ(dim);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t pair = 0; pair < 4; ++pair)
            succ[u].push_back(static_cast<std::uint32_t>(((u << 2) & (dim - 1)) | pair));
    for (auto& row : succ) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return PairTransferMatrix(k, std::move(succ));
}

bool PairTransferMatrix::entry(std::size_t from, std::size_t to) const {
    const auto& row = successors_.at(from);
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(to));
}

std::size_t PairTransferMatrix::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : successors_) total += row.size();
    return total;
}

std::vector<std::vector<int>> PairTransferMatrix::dense() const {
    std::vector<std::vector<int>> out(dim(), std::vector<int>(dim(), 0));
    for (std::size_t u = 0; u < dim(); ++u)
        for (auto v : successors_[u]) out[u][v] = 1;
    return out;
}

std::string PairTransferMatrix::state_label(std::size_t state) const {
    return to_bit_string(state, 2 * k_ - 2);
}

PairTransferMatrix build_pair_graph(const ForbiddenPair& fp) {
    const int k = fp.k();
    require_k(k);
    const std::size_t dim = state_count(k);
    std::vector<std::vector<std::uint32_t>> succ(dim);
    for (std::size_t u = 0; u < dim; ++u) {
        std::uint64_t ua = 0, ub = 0;
        deinterleave(u, k - 1, ua, ub);
        for (std::uint64_t pair = 0; pair < 4; ++pair) {
            // For k = 2 the shift drops the whole label; the next state is the new pair.
            const std::size_t v = ((u << 2) & (dim - 1)) | pair;
            const std::uint64_t a = (ua << 1) | (pair >> 1);
            const std::uint64_t b = (ub << 1) | (pair & 1u);
            const bool forbidden = (a == fp.p().value() && b == fp.q().value()) ||
                                   (a == fp.q().value() && b == fp.p().value());
            if (!forbidden) succ[u].push_back(static_cast<std::uint32_t>(v));
        }
        std::sort(succ[u].begin(), succ[u].end());
    }
    return PairTransferMatrix(k, std::move(succ));
}

BigCount count_walks(const PairTransferMatrix& m, long long steps) {
    if (steps < 0) throw InvalidArgument("walk length must be non-negative");
    std::vector<BigCount> cur(m.dim(), BigCount(1));
    std::vector<BigCount> next(m.dim());
    // cur[u] = number of walks of the current length starting at u.
    for (long long s = 0; s < steps; ++s) {
        for (std::size_t u = 0; u < m.dim(); ++u) {
            BigCount acc = 0;
            for (auto v : m.successors(u)) acc += cur[v];
            next[u] = std::move(acc);
        }
        cur.swap(next);
    }
    return std::accumulate(cur.begin(), cur.end(), BigCount(0));
}

BigCount count_pairs(const ForbiddenPair& fp, int n) {
    if (n < 1) throw InvalidArgument("word length n must be >= 1");
    if (n < fp.k()) return BigCount(1) << (2 * n);
    return count_walks(build_pair_graph(fp), n - fp.k() + 1);
}

double spectral_radius(const PairTransferMatrix& m, PowerIterationOptions opts) {
    if (!(opts.tol > 0)) throw InvalidArgument("tolerance must be positive");
    const std::size_t dim = m.dim();
    std::vector<double> x(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    std::vector<double> y(dim);
    double previous = std::nan("");
    double estimate = 0.0;
    for (long long it = 0; it < opts.max_iterations; ++it) {
        // y = (M + I) x
        for (std::size_t u = 0; u < dim; ++u) {
            double acc = x[u];
            for (auto v : m.successors(u)) acc += x[v];
            y[u] = acc;
        }
        const double xy = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        const double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
        estimate = xy / xx;
        if (std::abs(estimate - previous) < opts.tol) return estimate - 1.0;
        previous = estimate;
        const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (std::size_t u = 0; u < dim; ++u) x[u] = y[u] / norm;
    }
    throw NumericalFailure("power iteration did not converge within " +
                               std::to_string(opts.max_iterations) + " iterations",
                           estimate - 1.0);
}

double alpha(const ForbiddenPair& fp, PowerIterationOptions opts) {
    return std::log2(spectral_radius(build_pair_graph(fp), opts) / 2.0);
}

double growth_rate_of_N(const ForbiddenPair& fp, PowerIterationOptions opts) {
    return std::log2(spectral_radius(build_pair_graph(fp), opts));
}

}  // namespace tfc
