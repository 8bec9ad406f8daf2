#include "tfc/analysis.hpp"

#include "tfc/errors.hpp"
#include "tfc/subdp.hpp"
#include "tfc/tfgraph.hpp"

namespace tfc {

RateBounds theorem1_bounds(double alpha) {
    if (!(alpha > 0.0))
        throw OutOfDomain("rate bounds need a positive edge-density growth rate, got " +
                          std::to_string(alpha));
    return {alpha, alpha, (1.0 + alpha) / 2.0, kStatelessCeiling};
}

RateTable rate_table(const ForbiddenPair& fp, std::span<const int> n_values, TableOptions opts) {
    const double a = alpha(fp, {opts.tol});
    RateTable table{fp, a, theorem1_bounds(a), {}};
    for (int n : n_values) {
        if (n < 1) throw InvalidArgument("table rows need n >= 1");
        RateRow row;
        row.n = n;
        row.pairs = count_pairs(fp, n);
        row.edges = (row.pairs - (BigCount(1) << n)) / 2;
        row.density = std::ldexp(row.edges.convert_to<double>(), -n);
        if (row.edges > 0) row.alpha_estimate = (log2_big(row.edges) - n) / n;

        try {
            if (n > opts.min_degree_cap)
                throw ResourceLimit("table-min-degree-n", opts.min_degree_cap,
                                    "minimum-degree scan skipped above n = " +
                                        std::to_string(opts.min_degree_cap),
                                    "raise the min-degree cap (scan cost grows as 2^n)");
            row.min_degree = min_degree(fp, n, opts.threads);
        } catch (const ResourceLimit& e) {
            row.limits.push_back("min_degree: " + std::string(e.what()));
        }

        try {
            const bool exact = (std::size_t{1} << std::min(n, 30)) <= subdp_exact_cap();
            if (!exact && n > opts.heuristic_cap)
                throw ResourceLimit("table-heuristic-n", opts.heuristic_cap,
                                    "SubDP heuristic skipped above n = " +
                                        std::to_string(opts.heuristic_cap),
                                    "raise --heuristic-cap");
            const auto g = build_graph(fp, n, {graph_cap(), opts.threads});
            const SubDPResult r = exact ? subdp_exact(g.graph_ptr())
                                        : subdp_heuristic(g.graph_ptr(), {std::nullopt, opts.seed, 200});
            row.subdp = r.value;
            row.subdp_exact = r.exact;
            row.rate = rate_from_subdp(r, n);
        } catch (const ResourceLimit& e) {
            row.limits.push_back("subdp: " + std::string(e.what()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace tfc
