#include "tfc/io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

std::uint64_t parse_word(const std::string& s, int n) {
    const BitWord w = BitWord::parse(s);
    if (w.length() != n) throw InvalidArgument("word '" + s + "' does not have length " + std::to_string(n));
    return w.value();
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

Json pair_graph_to_json(const PairTransferMatrix& m) {
    Json labels = Json::array();
    for (std::size_t u = 0; u < m.dim(); ++u) labels.push_back(m.state_label(u));
    return Json{{"k", m.k()}, {"dim", m.dim()}, {"labels", labels}, {"entries", m.dense()}};
}

PairTransferMatrix pair_graph_from_json(const Json& j) {
    const int k = j.at("k").get<int>();
    const auto entries = j.at("entries").get<std::vector<std::vector<int>>>();
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != entries.size())
        throw InvalidArgument("dim does not match entries");
    return PairTransferMatrix(k, entries);
}

void write_edge_list(std::ostream& out, const TransitionFreeGraph& g) {
    const Graph& graph = g.graph();
    for (std::size_t u = 0; u < graph.vertex_count(); ++u)
        graph.neighbors(u).for_each([&](std::size_t v) {
            if (u < v) out << to_bit_string(u, g.n()) << ' ' << to_bit_string(v, g.n()) << '\n';
        });
}

Json partition_to_json(const DomaticPartition& part, int n, bool exact) {
    Json members = Json::array();
    Json assignment = Json::object();
    part.graph.members().for_each([&](std::size_t v) {
        const std::string w = to_bit_string(v, n);
        members.push_back(w);
        assignment[w] = part.assignment[v];
    });
    return Json{{"n", n},
                {"class_count", part.class_count},
                {"exact", exact},
                {"members", members},
                {"assignment", assignment}};
}

DomaticPartition partition_from_json(const Json& j, const TransitionFreeGraph& g) {
    const int n = j.at("n").get<int>();
    if (n != g.n()) throw InvalidArgument("partition word length does not match graph");
    Bitset members(g.vertex_count());
    std::vector<int> assignment(g.vertex_count(), 0);
    for (const auto& w : j.at("members")) members.set(parse_word(w.get<std::string>(), n));
    for (const auto& [w, c] : j.at("assignment").items()) assignment[parse_word(w, n)] = c.get<int>();
    return DomaticPartition{InducedSubgraph(g.graph_ptr(), members), j.at("class_count").get<int>(),
                            std::move(assignment)};
}

Json codec_to_json(const Codec& c) {
    const int n = c.n();
    Json states = Json::array();
    Json decode = Json::object();
    Json encode = Json::object();
    for (auto s : c.states()) {
        const std::string sw = to_bit_string(s, n);
        states.push_back(sw);
        if (auto m = c.decode(s)) decode[sw] = *m;
        for (int m = 1; m <= c.message_count(); ++m)
            encode[std::to_string(m) + "," + sw] = to_bit_string(c.encode(m, s), n);
    }
    return Json{{"n", n},
                {"k", c.fp().k()},
                {"p", c.fp().p().to_string()},
                {"q", c.fp().q().to_string()},
                {"M", c.message_count()},
                {"states", states},
                {"decode", decode},
                {"encode", encode}};
}

Codec codec_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const ForbiddenPair fp = ForbiddenPair::parse(j.at("p").get<std::string>(), j.at("q").get<std::string>());
    if (j.contains("k") && j.at("k").get<int>() != fp.k()) throw InvalidArgument("k does not match p/q");
    const int M = j.at("M").get<int>();
    if (M < 1) throw InvalidArgument("M must be positive");

    std::vector<std::uint64_t> states;
    for (const auto& s : j.at("states")) states.push_back(parse_word(s.get<std::string>(), n));
    std::sort(states.begin(), states.end());
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);

    std::unordered_map<std::uint64_t, int> decode;
    for (const auto& [w, m] : j.at("decode").items()) decode[parse_word(w, n)] = m.get<int>();

    std::vector<std::vector<std::uint64_t>> encode(static_cast<std::size_t>(M),
                                                   std::vector<std::uint64_t>(states.size()));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(M), std::vector<bool>(states.size(), false));
    for (const auto& [key, w] : j.at("encode").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw InvalidArgument("encode key must be 'm,state': " + key);
        const int m = std::stoi(key.substr(0, comma));
        if (m < 1 || m > M) throw InvalidArgument("encode key has message out of range: " + key);
        const auto it = index.find(parse_word(key.substr(comma + 1), n));
        if (it == index.end()) throw InvalidArgument("encode key has unknown state: " + key);
        encode[static_cast<std::size_t>(m - 1)][it->second] = parse_word(w.get<std::string>(), n);
        seen[static_cast<std::size_t>(m - 1)][it->second] = true;
    }
    for (const auto& row : seen)
        if (std::find(row.begin(), row.end(), false) != row.end())
            throw InvalidArgument("encode table is missing entries");
    return Codec(n, fp, M, std::move(states), std::move(decode), std::move(encode));
}

Json rate_table_to_json(const RateTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row{{"n", r.n},
                 {"pairs", r.pairs.str()},
                 {"edges", r.edges.str()},
                 {"density", r.density},
                 {"subdp_exact", r.subdp_exact},
                 {"limits", r.limits}};
        row["min_degree"] = r.min_degree ? Json(r.min_degree->str()) : Json(nullptr);
        row["alpha_estimate"] = r.alpha_estimate ? Json(*r.alpha_estimate) : Json(nullptr);
        row["subdp"] = r.subdp ? Json(*r.subdp) : Json(nullptr);
        row["rate"] = r.rate ? Json(*r.rate) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    return Json{{"p", t.fp.p().to_string()},
                {"q", t.fp.q().to_string()},
                {"alpha", t.alpha},
                {"lower", t.bounds.lower},
                {"upper", t.bounds.upper},
                {"stateless_ceiling", t.bounds.comparison_stateless},
                {"rows", rows}};
}

std::string rate_table_to_csv(const RateTable& t) {
    std::ostringstream os;
    os << "n,pairs,edges,density,min_degree,alpha_estimate,subdp,subdp_exact,rate,alpha,lower,upper\n";
    for (const auto& r : t.rows) {
        os << r.n << ',' << r.pairs.str() << ',' << r.edges.str() << ',' << fmt(r.density) << ','
           << (r.min_degree ? r.min_degree->str() : "") << ','
           << (r.alpha_estimate ? fmt(*r.alpha_estimate) : "") << ','
           << (r.subdp ? std::to_string(*r.subdp) : "") << ','
           << (r.subdp ? (r.subdp_exact ? "true" : "false") : "") << ','
           << (r.rate ? fmt(*r.rate) : "") << ',' << fmt(t.alpha) << ',' << fmt(t.bounds.lower) << ','
           << fmt(t.bounds.upper) << '\n';
    }
    return os.str();
}

std::string rate_plot_csv(const RateTable& t) {
    std::ostringstream os;
    os << "n,rate,lower,upper\n";
    for (const auto& r : t.rows)
        if (r.rate)
            os << r.n << ',' << fmt(*r.rate) << ',' << fmt(t.bounds.lower) << ',' << fmt(t.bounds.upper) << '\n';
    return os.str();
}

}  // namespace tfc
