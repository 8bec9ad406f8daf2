// tfc: command-line front end for transition-free code construction.
//
// Exit codes: 0 success, 1 property violation, 2 usage error, 3 resource limit.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "tfc/analysis.hpp"
#include "tfc/codec.hpp"
#include "tfc/errors.hpp"
#include "tfc/io.hpp"
#include "tfc/pairgraph.hpp"
#include "tfc/subdp.hpp"
#include "tfc/tfgraph.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string p = "10";
    std::string q = "01";
    int n = 0;
    std::string n_range;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    std::string plot_out;
    std::string matrix_out;
    std::string in;
    std::optional<int> target;
    bool exact = false;
    long long messages = 100000;
    std::string s0;
    int heuristic_cap = 10;
    int min_degree_cap = 20;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

/// Writes `content` to `path` and reports the path with its digest.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw tfc::InvalidArgument("cannot open output file " + path);
    f << content;
    std::cout << "wrote " << path << " sha256:" << sha256_hex(content) << "\n";
}

/// `-` or empty means stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(path, std::ios::binary);
    if (!f) throw tfc::InvalidArgument("cannot open input file " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

std::vector<int> parse_n_values(const RunConfig& cfg) {
    if (cfg.n_range.empty()) {
        if (cfg.n < 1) throw tfc::InvalidArgument("--n must be >= 1 (or give --n-range a:b)");
        return {cfg.n};
    }
    const auto colon = cfg.n_range.find(':');
    if (colon == std::string::npos) throw tfc::InvalidArgument("--n-range must look like a:b");
    const int lo = std::stoi(cfg.n_range.substr(0, colon));
    const int hi = std::stoi(cfg.n_range.substr(colon + 1));
    if (lo < 1 || hi < lo) throw tfc::InvalidArgument("--n-range bounds must satisfy 1 <= a <= b");
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

/// Four decimals, truncated toward zero.
std::string truncated(double v) { return fixed(std::trunc(v * 1e4) / 1e4, 4); }

std::string precise(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

int cmd_count(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    if (cfg.n < 1) throw tfc::InvalidArgument("--n must be >= 1");
    const tfc::BigCount N = tfc::count_pairs(fp, cfg.n);
    if (cfg.format == "json")
        emit(cfg.out, tfc::Json{{"p", cfg.p}, {"q", cfg.q}, {"n", cfg.n}, {"count", N.str()}}.dump(2) + "\n");
    else
        emit(cfg.out, N.str() + "\n");
    return 0;
}

int cmd_alpha(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    const auto m = tfc::build_pair_graph(fp);
    const double lambda = tfc::spectral_radius(m, {cfg.tol});
    const double a = std::log2(lambda / 2.0);
    const tfc::RateBounds b = tfc::theorem1_bounds(a);
    if (!cfg.matrix_out.empty()) write_file(cfg.matrix_out, tfc::pair_graph_to_json(m).dump(2) + "\n");
    if (cfg.format == "json") {
        emit(cfg.out, tfc::Json{{"p", cfg.p},
                                {"q", cfg.q},
                                {"lambda_max", lambda},
                                {"alpha", a},
                                {"growth_rate_N", std::log2(lambda)},
                                {"lower", b.lower},
                                {"upper", b.upper},
                                {"stateless_ceiling", b.comparison_stateless}}
                              .dump(2) +
                          "\n");
        return 0;
    }
    std::ostringstream os;
    os << "lambda_max=" << precise(lambda) << "\n"
       << "alpha=" << precise(a) << "\n"
       << "growth_rate_N=" << precise(std::log2(lambda)) << "\n"
       << "bounds=(" << truncated(b.lower) << ", " << truncated(b.upper) << ")  # truncated to 4 decimals\n"
       << "lower=" << precise(b.lower) << "\n"
       << "upper=" << precise(b.upper) << "\n"
       << "stateless_ceiling=" << fixed(b.comparison_stateless, 4) << "\n";
    emit(cfg.out, os.str());
    return 0;
}

int cmd_graph(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    const auto g = tfc::build_graph(fp, cfg.n, {tfc::graph_cap(), cfg.threads});
    const auto whole = tfc::InducedSubgraph::whole(g.graph_ptr());
    if (!cfg.out.empty()) {
        std::ostringstream edges;
        tfc::write_edge_list(edges, g);
        write_file(cfg.out, edges.str());
    }
    const std::size_t E = g.graph().edge_count();
    if (cfg.format == "json") {
        std::cout << tfc::Json{{"n", cfg.n},
                               {"vertices", g.vertex_count()},
                               {"edges", E},
                               {"density", tfc::edge_density(g)},
                               {"min_degree", whole.min_degree()},
                               {"max_degree", whole.max_degree()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "vertices=" << g.vertex_count() << "\nedges=" << E
                  << "\ndensity=" << precise(tfc::edge_density(g)) << "\nmin_degree=" << whole.min_degree()
                  << "\nmax_degree=" << whole.max_degree() << "\n";
    }
    return 0;
}

tfc::SubDPResult solve_subdp(const tfc::TransitionFreeGraph& g, const RunConfig& cfg) {
    if (cfg.exact) return tfc::subdp_exact(g.graph_ptr());
    return tfc::subdp_heuristic(g.graph_ptr(), {cfg.target, cfg.seed, 200});
}

int cmd_subdp(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    const auto g = tfc::build_graph(fp, cfg.n, {tfc::graph_cap(), cfg.threads});
    const auto r = solve_subdp(g, cfg);
    const tfc::Json witness = tfc::partition_to_json(r.partition, cfg.n, r.exact);
    if (cfg.format == "json") {
        tfc::Json j{{"S", r.value},
                    {"exact", r.exact},
                    {"rate", tfc::rate_from_subdp(r, cfg.n)},
                    {"subgraph_size", r.subgraph.size()},
                    {"partition", witness}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "S=" << r.value << "\nexact=" << (r.exact ? "true" : "false")
                  << "\nsubgraph_size=" << r.subgraph.size() << "\nrate=" << precise(tfc::rate_from_subdp(r, cfg.n))
                  << "\n";
    }
    if (!cfg.out.empty()) write_file(cfg.out, witness.dump(2) + "\n");
    return 0;
}

tfc::Codec synth_codec(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    const auto g = tfc::build_graph(fp, cfg.n, {tfc::graph_cap(), cfg.threads});
    const auto r = solve_subdp(g, cfg);
    return tfc::synthesize(r.partition, fp, cfg.n);
}

tfc::Codec load_or_synth(const RunConfig& cfg) {
    if (!cfg.in.empty()) return tfc::codec_from_json(tfc::Json::parse(read_input(cfg.in)));
    if (cfg.n >= 1) return synth_codec(cfg);
    return tfc::codec_from_json(tfc::Json::parse(read_input("-")));
}

int cmd_codec_synth(const RunConfig& cfg) {
    if (cfg.n < 1) throw tfc::InvalidArgument("--n must be >= 1");
    emit(cfg.out, tfc::codec_to_json(synth_codec(cfg)).dump(2) + "\n");
    return 0;
}

int cmd_codec_verify(const RunConfig& cfg) {
    const tfc::Codec c = tfc::codec_from_json(tfc::Json::parse(read_input(cfg.in)));
    const auto report = tfc::verify_consistency(c);
    std::cout << "consistent: " << (report ? "true" : "false") << "\nM=" << c.message_count()
              << "\nstates=" << c.states().size() << "\nrate=" << precise(c.rate()) << "\n";
    if (!report) {
        std::cout << "counterexample: m=" << report.message << " s=" << tfc::to_bit_string(report.state, c.n())
                  << " E(m,s)=" << tfc::to_bit_string(report.word, c.n()) << " (" << report.reason << ")\n";
        return kExitViolation;
    }
    return 0;
}

int cmd_codec_simulate(const RunConfig& cfg) {
    const tfc::Codec c = load_or_synth(cfg);
    if (cfg.messages < 0) throw tfc::InvalidArgument("--messages must be non-negative");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(1, c.message_count());
    std::vector<int> messages(static_cast<std::size_t>(cfg.messages));
    for (auto& m : messages) m = pick(rng);

    const tfc::BitWord s0 = cfg.s0.empty() ? c.default_initial_state() : tfc::BitWord::parse(cfg.s0);
    const auto words = tfc::encode_stream(c, s0, messages);
    const auto decoded = tfc::decode_stream(c, words);

    long long violations = 0;
    tfc::BitWord prev = s0;
    for (const auto& w : words) {
        if (tfc::is_violating(prev, w, c.fp())) ++violations;
        prev = w;
    }
    long long mismatches = 0;
    for (std::size_t i = 0; i < messages.size(); ++i)
        if (!decoded[i] || *decoded[i] != messages[i]) ++mismatches;

    std::cout << "messages=" << messages.size() << "\nM=" << c.message_count() << "\nstates=" << c.states().size()
              << "\nviolations=" << violations << "\nmismatches=" << mismatches << "\nrate=" << precise(c.rate())
              << "\n";
    return violations == 0 && mismatches == 0 ? 0 : kExitViolation;
}

int cmd_table(const RunConfig& cfg) {
    const auto fp = tfc::ForbiddenPair::parse(cfg.p, cfg.q);
    const auto ns = parse_n_values(cfg);
    tfc::TableOptions opts;
    opts.seed = cfg.seed;
    opts.tol = cfg.tol;
    opts.threads = cfg.threads;
    opts.heuristic_cap = cfg.heuristic_cap;
    opts.min_degree_cap = cfg.min_degree_cap;
    const auto t = tfc::rate_table(fp, ns, opts);
    if (cfg.format == "json")
        emit(cfg.out, tfc::rate_table_to_json(t).dump(2) + "\n");
    else
        emit(cfg.out, tfc::rate_table_to_csv(t));
    if (!cfg.plot_out.empty()) write_file(cfg.plot_out, tfc::rate_plot_csv(t));
    return 0;
}

void add_pair(CLI::App* app, RunConfig& cfg) {
    app->add_option("--p", cfg.p, "first forbidden pattern, e.g. 10")->required();
    app->add_option("--q", cfg.q, "second forbidden pattern, e.g. 01")->required();
}

void add_common(CLI::App* app, RunConfig& cfg) {
    app->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Transition-free code toolkit for crosstalk-avoiding buses"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto* count = app.add_subcommand("count", "exact number of transition-free word pairs N(p,q,n)");
    add_pair(count, cfg);
    count->add_option("--n", cfg.n, "word length")->required();
    count->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    count->add_option("--out", cfg.out, "output file (default stdout)");

    auto* alpha = app.add_subcommand("alpha", "edge-density growth rate and rate bounds");
    add_pair(alpha, cfg);
    alpha->add_option("--tol", cfg.tol, "power iteration tolerance")->check(CLI::PositiveNumber);
    alpha->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    alpha->add_option("--out", cfg.out, "output file (default stdout)");
    alpha->add_option("--matrix-out", cfg.matrix_out, "write the pair-graph matrix as JSON");

    auto* graph = app.add_subcommand("graph", "build G(p,q,n) and report degree statistics");
    add_pair(graph, cfg);
    add_common(graph, cfg);
    graph->add_option("--n", cfg.n, "word length")->required();
    graph->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    graph->add_option("--out", cfg.out, "write the edge list to this file");

    auto* subdp = app.add_subcommand("subdp", "SubDP number of G(p,q,n)");
    add_pair(subdp, cfg);
    add_common(subdp, cfg);
    subdp->add_option("--n", cfg.n, "word length")->required();
    subdp->add_flag("--exact", cfg.exact, "exhaustive solver (small n only)");
    subdp->add_option("--seed", cfg.seed, "heuristic seed");
    subdp->add_option("--target", cfg.target, "largest class count to try");
    subdp->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    subdp->add_option("--out", cfg.out, "write the witness partition JSON");

    auto* codec = app.add_subcommand("codec", "synthesize, verify and simulate codecs");
    codec->require_subcommand(1);
    auto* synth = codec->add_subcommand("synth", "build a codec from a domatic partition");
    add_pair(synth, cfg);
    add_common(synth, cfg);
    synth->add_option("--n", cfg.n, "word length")->required();
    synth->add_flag("--exact", cfg.exact, "use the exact SubDP solver");
    synth->add_option("--seed", cfg.seed, "heuristic seed");
    synth->add_option("--target", cfg.target, "largest class count to try");
    synth->add_option("--out", cfg.out, "codec JSON file (default stdout)");

    auto* verify = codec->add_subcommand("verify", "check the consistency condition of a codec JSON");
    verify->add_option("--in", cfg.in, "codec JSON file (default stdin)");

    auto* simulate = codec->add_subcommand("simulate", "encode and decode a random message stream");
    simulate->add_option("--in", cfg.in, "codec JSON file; otherwise synthesized from --p/--q/--n or read from stdin");
    simulate->add_option("--p", cfg.p);
    simulate->add_option("--q", cfg.q);
    simulate->add_option("--n", cfg.n, "word length");
    simulate->add_flag("--exact", cfg.exact, "use the exact SubDP solver");
    simulate->add_option("--messages", cfg.messages, "stream length");
    simulate->add_option("--seed", cfg.seed, "seed for messages and heuristic");
    simulate->add_option("--s0", cfg.s0, "initial state word");
    add_common(simulate, cfg);

    auto* table = app.add_subcommand("table", "per-n rate table");
    add_pair(table, cfg);
    add_common(table, cfg);
    table->add_option("--n", cfg.n, "single word length");
    table->add_option("--n-range", cfg.n_range, "inclusive range a:b");
    table->add_option("--seed", cfg.seed, "heuristic seed");
    table->add_option("--tol", cfg.tol, "power iteration tolerance")->check(CLI::PositiveNumber);
    table->add_option("--heuristic-cap", cfg.heuristic_cap, "largest n for the SubDP heuristic");
    table->add_option("--min-degree-cap", cfg.min_degree_cap, "largest n for the minimum-degree scan");
    table->add_option("--format", cfg.format)->check(CLI::IsMember(std::vector<std::string>{"csv", "json"}));
    table->add_option("--out", cfg.out, "output file (default stdout)");
    table->add_option("--plot-out", cfg.plot_out, "write n,rate,lower,upper rows");
    cfg.format = "text";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count) return cmd_count(cfg);
        if (*alpha) return cmd_alpha(cfg);
        if (*graph) return cmd_graph(cfg);
        if (*subdp) return cmd_subdp(cfg);
        if (*synth) return cmd_codec_synth(cfg);
        if (*verify) return cmd_codec_verify(cfg);
        if (*simulate) return cmd_codec_simulate(cfg);
        if (*table) return cmd_table(cfg);
    } catch (const tfc::ResourceLimit& e) {
        std::cerr << "resource limit (" << e.cap() << " = " << e.limit() << "): " << e.what()
                  << "\nsuggestion: " << e.suggestion() << "\n";
        return kExitResource;
    } catch (const tfc::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << " (last estimate " << e.last_estimate() << ")\n";
        return kExitViolation;
    } catch (const tfc::Json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
