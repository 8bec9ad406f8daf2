#pragma once

// JSON / CSV / edge-list formats shared by the CLI and tests.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tfc/analysis.hpp"
#include "tfc/codec.hpp"
#include "tfc/pairgraph.hpp"
#include "tfc/subdp.hpp"
#include "tfc/tfgraph.hpp"

namespace tfc {

using Json = nlohmann::json;

/// {"k", "dim", "labels": [...], "entries": [[0/1 ...] ...]} in row-major order.
Json pair_graph_to_json(const PairTransferMatrix& m);
PairTransferMatrix pair_graph_from_json(const Json& j);

/// One "u v" line per edge (u < v), words written as bit strings.
void write_edge_list(std::ostream& out, const TransitionFreeGraph& g);

/// {"n", "class_count", "exact", "members": [...], "assignment": {word: class}}.
Json partition_to_json(const DomaticPartition& part, int n, bool exact);
/// Rebuilds a partition over the parent graph `g`.
DomaticPartition partition_from_json(const Json& j, const TransitionFreeGraph& g);

/// {"n","k","p","q","M","states":[...],"decode":{word: m},"encode":{"m,s": word}}.
Json codec_to_json(const Codec& c);
Codec codec_from_json(const Json& j);

Json rate_table_to_json(const RateTable& t);
/// Header row plus one row per n; empty cells for capped values.
std::string rate_table_to_csv(const RateTable& t);
/// "n,rate,lower,upper" rows for plotting.
std::string rate_plot_csv(const RateTable& t);

}  // namespace tfc
