// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfc/analysis.hpp"
#include "tfc/codec.hpp"
#include "tfc/pairgraph.hpp"
#include "tfc/subdp.hpp"
#include "tfc/tfgraph.hpp"

namespace {

using tfc::BigCount;
using tfc::BitWord;
using tfc::ForbiddenPair;

const ForbiddenPair ftc = ForbiddenPair::parse("10", "01");
const ForbiddenPair foc = ForbiddenPair::parse("101", "010");

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Outcome&)> run;
};

std::string run_command(const std::string& cmd, int& status) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 512> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) out += buf.data();
    status = pclose(pipe.release());
    return out;
}

void eigenvalue_closed_form(Outcome& o) {
    const double lambda = tfc::spectral_radius(tfc::build_pair_graph(ftc));
    const double expected_lambda = (3.0 + std::sqrt(17.0)) / 2.0;
    const double a = tfc::alpha(ftc);
    const double expected_alpha = -2.0 + std::log2(3.0 + std::sqrt(17.0));
    o.detail << std::setprecision(12) << "lambda=" << lambda << " alpha=" << a;
    o.require(std::abs(lambda - expected_lambda) <= 1e-9, "|lambda - (3+sqrt17)/2| <= 1e-9");
    o.require(std::abs(a - expected_alpha) <= 1e-6, "|alpha - (-2+log2(3+sqrt17))| <= 1e-6");
}

void bounds_cli(Outcome& o) {
    int status = 0;
    const std::string out = run_command(std::string(TFC_CLI_PATH) + " alpha --p 10 --q 01", status);
    const auto pos = out.find("bounds=");
    const std::string line = pos == std::string::npos ? "" : out.substr(pos, out.find('\n', pos) - pos);
    o.detail << "cli: " << line;
    o.require(status == 0, "exit code 0");
    o.require(line.rfind("bounds=(0.8325, 0.9162)", 0) == 0, "bounds print as (0.8325, 0.9162)");
}

void pattern3_growth_rate(Outcome& o) {
    const auto m = tfc::build_pair_graph(foc);
    bool structure = m.dim() == 16;
    for (std::size_t u = 0; u < m.dim(); ++u) {
        const bool special = m.state_label(u) == "0110" || m.state_label(u) == "1001";
        structure = structure && m.out_degree(u) == (special ? 3u : 4u);
    }
    structure = structure && !m.entry(0b0110, 0b1001) && !m.entry(0b1001, 0b0110);
    const double a = tfc::alpha(foc);
    o.detail << std::setprecision(8) << "alpha(101,010)=" << a;
    o.require(structure, "out-degree 4 except 0110->1001 and 1001->0110 missing");
    o.require(std::abs(a - 0.9636) <= 1e-3, "|alpha - 0.9636| <= 1e-3");
}

void exact_count_oracle(Outcome& o) {
    int checked = 0;
    for (const auto& fp : {ftc, foc}) {
        for (int n = 1; n <= 10; ++n) {
            std::uint64_t brute = 0;
            for (std::uint64_t a = 0; a < (1u << n); ++a)
                for (std::uint64_t b = 0; b < (1u << n); ++b)
                    if (tfc::is_transition_free(BitWord(n, a), BitWord(n, b), fp)) ++brute;
            const BigCount N = tfc::count_pairs(fp, n);
            o.require(N == brute, "N(" + fp.p().to_string() + "," + fp.q().to_string() + "," +
                                      std::to_string(n) + ") = brute force");
            ++checked;
        }
    }
    o.require(tfc::count_pairs(ftc, 2) == 14, "N(10,01,2) = 14");
    o.require(tfc::count_pairs(ftc, 3) == 50, "N(10,01,3) = 50");
    o.detail << checked << " (fp,n) cases; N(10,01,2)=" << tfc::count_pairs(ftc, 2)
             << " N(10,01,3)=" << tfc::count_pairs(ftc, 3);
}

void edge_formula(Outcome& o) {
    const auto g = tfc::build_graph(ftc, 3);
    const std::size_t popcount_edges = g.graph().edge_count();
    const BigCount formula = (tfc::count_pairs(ftc, 3) - 8) / 2;
    o.detail << "vertices=" << g.vertex_count() << " popcount/2=" << popcount_edges << " formula=" << formula;
    o.require(g.vertex_count() == 8, "8 vertices");
    o.require(popcount_edges == 21, "adjacency popcount / 2 = 21");
    o.require(formula == 21, "(N - 2^n)/2 = 21");
}

void subdp_ground_truth(Outcome& o) {
    const auto g = tfc::build_graph(ftc, 2);
    const auto r = tfc::subdp_exact(g.graph_ptr());
    o.require(r.value == 3 && r.exact, "subdp_exact = 3");
    o.require(tfc::is_domatic_partition(r.partition), "exact witness validates");
    int matched = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto h = tfc::subdp_heuristic(g.graph_ptr(), {std::nullopt, seed, 200});
        matched += h.value == 3 && tfc::is_domatic_partition(h.partition);
    }
    o.detail << "exact S=" << r.value << ", heuristic matched on " << matched << "/10 seeds";
    o.require(matched == 10, "heuristic = 3 for all 10 seeds");
}

void codec_soundness(Outcome& o) {
    constexpr std::size_t kMessages = 100000;
    for (int n : {2, 3, 4, 8, 10}) {
        const bool exact = n <= 4;
        const auto g = tfc::build_graph(ftc, n, {tfc::graph_cap(), 4});
        const auto r = exact ? tfc::subdp_exact(g.graph_ptr())
                             : tfc::subdp_heuristic(g.graph_ptr(), {std::nullopt, 1, 200});
        const tfc::Codec c = tfc::synthesize(r.partition, ftc, n);
        o.require(static_cast<bool>(tfc::verify_consistency(c)), "consistency n=" + std::to_string(n));

        std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<int> pick(1, c.message_count());
        std::vector<int> messages(kMessages);
        for (auto& m : messages) m = pick(rng);
        const BitWord s0 = c.default_initial_state();
        const auto words = tfc::encode_stream(c, s0, messages);

        long violations = 0;
        BitWord prev = s0;
        for (const auto& w : words) {
            violations += tfc::is_violating(prev, w, ftc);
            prev = w;
        }
        const auto decoded = tfc::decode_stream(c, words);
        long mismatches = 0;
        for (std::size_t i = 0; i < kMessages; ++i) mismatches += decoded[i] != messages[i];

        // Single-word corruption at random positions.
        long worst_changed = 0;
        std::uniform_int_distribution<std::size_t> at(0, kMessages - 1);
        std::uniform_int_distribution<std::uint64_t> flip(1, (std::uint64_t{1} << n) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t pos = at(rng);
            const std::size_t lo = pos >= 3 ? pos - 3 : 0;
            const std::size_t hi = std::min(kMessages, pos + 4);
            std::vector<BitWord> window(words.begin() + static_cast<long>(lo), words.begin() + static_cast<long>(hi));
            window[pos - lo] = BitWord(n, window[pos - lo].value() ^ flip(rng));
            const auto dec = tfc::decode_stream(c, window);
            long changed = 0;
            for (std::size_t i = lo; i < hi; ++i) changed += dec[i - lo] != decoded[i];
            worst_changed = std::max(worst_changed, changed);
        }
        o.detail << "n=" << n << (exact ? "(exact" : "(heur") << " M=" << c.message_count()
                 << ") viol=" << violations << " mism=" << mismatches << " corrupt<=" << worst_changed << "; ";
        o.require(violations == 0, "no forbidden transitions n=" + std::to_string(n));
        o.require(mismatches == 0, "no round-trip mismatches n=" + std::to_string(n));
        o.require(worst_changed <= 1, "corruption changes at most one message n=" + std::to_string(n));
    }
}

void density_core_pruning(Outcome& o) {
    for (int n = 4; n <= 12; ++n) {
        const auto g = tfc::build_graph(ftc, n, {tfc::graph_cap(), 4});
        const auto whole = tfc::InducedSubgraph::whole(g.graph_ptr());
        const double eps = whole.density();
        const auto core = tfc::prune_to_density_core(whole);
        const std::size_t delta = core.min_degree();
        o.require(core.size() > 0, "nonempty core n=" + std::to_string(n));
        o.require(static_cast<double>(delta) >= eps, "delta >= eps n=" + std::to_string(n));
        if (n == 4 || n == 12)
            o.detail << "n=" << n << " |core|=" << core.size() << " delta=" << delta << " eps=" << eps << "; ";
    }
}

void min_degree_trend(Outcome& o) {
    double previous = -1.0;
    bool increasing = true;
    bool below = true;
    o.detail << std::fixed << std::setprecision(4);
    for (int n = 4; n <= 20; ++n) {
        const BigCount d = tfc::min_degree(ftc, n, 4);
        const double growth = tfc::log2_big(d) / n;
        if (growth <= previous) increasing = false;
        if (growth >= 0.72) below = false;
        previous = growth;
        o.detail << n << ":" << growth << " ";
    }
    o.detail << "(limit " << tfc::kStatelessCeiling << ")";
    o.require(increasing, "(1/n)log2 delta increasing over n=4..20");
    o.require(below, "(1/n)log2 delta < 0.72 over n=4..20");
}

void heuristic_regression_floor(Outcome& o) {
    const auto g = tfc::build_graph(ftc, 8);
    const auto r = tfc::subdp_heuristic(g.graph_ptr(), {std::nullopt, 1, 200});
    const double rate = std::log2(r.value) / 8.0;
    o.detail << "M=" << r.value << " rate=" << std::setprecision(6) << rate;
    o.require(tfc::is_domatic_partition(r.partition), "valid partition");
    o.require(rate >= 0.55, "log2(M)/8 >= 0.55");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "eigenvalue closed form", 1.0, eigenvalue_closed_form},
        {2, "rate bounds printout via CLI", 1.0, bounds_cli},
        {3, "(101,010) growth rate and pair-graph structure", 1.0, pattern3_growth_rate},
        {4, "exact-count oracle n=1..10", 120.0, exact_count_oracle},
        {5, "edge formula |E(10,01,3)| = 21", 1.0, edge_formula},
        {6, "SubDP ground truth on G(10,01,2)", 5.0, subdp_ground_truth},
        {7, "codec soundness (exact n=2,3,4; heuristic n=8,10)", 120.0, codec_soundness},
        {8, "density-core pruning n=4..12", 60.0, density_core_pruning},
        {9, "min-degree growth trend n=4..20", 120.0, min_degree_trend},
        {10, "heuristic regression floor n=8 seed 1", 60.0, heuristic_regression_floor},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream budget;
        budget << std::fixed << std::setprecision(3) << seconds << "s/" << c.budget_seconds << "s";
        o.require(seconds < c.budget_seconds, "runtime " + budget.str());
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << budget.str()
                  << ") " << o.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
