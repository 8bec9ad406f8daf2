#include "tfc/codec.hpp"

#include <algorithm>
#include <cmath>

#include "tfc/errors.hpp"

namespace tfc {

Codec::Codec(int n, ForbiddenPair fp, int message_count, std::vector<std::uint64_t> states,
             std::unordered_map<std::uint64_t, int> decode,
             std::vector<std::vector<std::uint64_t>> encode)
    : n_(n),
      fp_(std::move(fp)),
      message_count_(message_count),
      states_(std::move(states)),
      decode_(std::move(decode)),
      encode_(std::move(encode)) {
    if (n_ < 1 || n_ > BitWord::kMaxLength) throw InvalidArgument("codec word length out of range");
    if (message_count_ < 1) throw InvalidArgument("codec needs at least one message");
    if (states_.empty()) throw InvalidArgument("codec needs a nonempty state set");
    std::sort(states_.begin(), states_.end());
    if (std::adjacent_find(states_.begin(), states_.end()) != states_.end())
        throw InvalidArgument("duplicate codec state");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        (void)BitWord(n_, states_[i]);  // range check
        index_.emplace(states_[i], i);
    }
    if (encode_.size() != static_cast<std::size_t>(message_count_))
        throw InvalidArgument("encoder table must have one row per message");
    for (const auto& row : encode_)
        if (row.size() != states_.size()) throw InvalidArgument("encoder row must cover every state");
}

std::optional<int> Codec::decode(std::uint64_t word) const {
    auto it = decode_.find(word);
    if (it == decode_.end()) return std::nullopt;
    return it->second;
}

std::size_t Codec::state_index(std::uint64_t word) const {
    auto it = index_.find(word);
    if (it == index_.end())
        throw InvalidArgument("word " + to_bit_string(word, n_) + " is not a codec state");
    return it->second;
}

std::uint64_t Codec::encode(int message, std::uint64_t state) const {
    if (message < 1 || message > message_count_)
        throw InvalidArgument("message " + std::to_string(message) + " outside [1, " +
                              std::to_string(message_count_) + "]");
    return encode_[static_cast<std::size_t>(message - 1)][state_index(state)];
}

double Codec::rate() const { return std::log2(static_cast<double>(message_count_)) / n_; }

void Codec::set_decode(std::uint64_t word, int message) { decode_[word] = message; }

void Codec::set_encode(int message, std::uint64_t state, std::uint64_t word) {
    if (message < 1 || message > message_count_) throw InvalidArgument("message out of range");
    encode_[static_cast<std::size_t>(message - 1)][state_index(state)] = word;
}

Codec synthesize(const DomaticPartition& part, const ForbiddenPair& fp, int n) {
    if (n < 1 || n > 30) throw InvalidArgument("codec word length out of range");
    if (part.graph.parent().vertex_count() != (std::size_t{1} << n))
        throw InvalidArgument("partition graph does not have 2^n vertices");
    const PartitionCheck check = check_domatic_partition(part);
    if (!check) throw InvalidArgument("not a domatic partition: " + check.describe());

    const auto& g = part.graph;
    std::vector<std::uint64_t> states;
    std::unordered_map<std::uint64_t, int> decode;
    g.members().for_each([&](std::size_t v) {
        states.push_back(v);
        decode.emplace(v, part.assignment[v]);
    });

    const auto M = static_cast<std::size_t>(part.class_count);
    std::vector<std::vector<std::uint64_t>> encode(M, std::vector<std::uint64_t>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
        const std::size_t s = states[i];
        std::vector<bool> filled(M, false);
        // for_each runs in increasing order, so the first hit per class is the smallest.
        g.closed_neighborhood(s).for_each([&](std::size_t w) {
            const auto c = static_cast<std::size_t>(part.assignment[w] - 1);
            if (filled[c]) return;
            if (is_violating(s, w, n, fp))
                throw InvalidArgument("partition graph is not G(p,q,n): " + to_bit_string(s, n) +
                                      " and " + to_bit_string(w, n) + " violate");
            filled[c] = true;
            encode[c][i] = w;
        });
    }
    return Codec(n, fp, part.class_count, std::move(states), std::move(decode), std::move(encode));
}

ConsistencyReport verify_consistency(const Codec& c) {
    for (int m = 1; m <= c.message_count(); ++m) {
        for (auto s : c.states()) {
            const std::uint64_t w = c.encode(m, s);
            auto fail = [&](std::string reason) {
                return ConsistencyReport{false, m, s, w, std::move(reason)};
            };
            if (!c.is_state(w)) return fail("encoded word leaves the state set");
            const auto decoded = c.decode(w);
            if (!decoded || *decoded != m) return fail("decoder does not recover the message");
            if (is_violating(s, w, c.n(), c.fp())) return fail("forbidden transition from state");
        }
    }
    return {};
}

std::vector<BitWord> encode_stream(const Codec& c, const BitWord& s0, std::span<const int> messages) {
    if (s0.length() != c.n()) throw InvalidArgument("initial state has wrong length");
    if (!c.is_state(s0.value())) throw InvalidArgument("initial state " + s0.to_string() + " is not in V*");
    std::vector<BitWord> out;
    out.reserve(messages.size());
    std::uint64_t state = s0.value();
    for (int m : messages) {
        state = c.encode(m, state);
        out.emplace_back(c.n(), state);
    }
    return out;
}

std::vector<std::optional<int>> decode_stream(const Codec& c, std::span<const BitWord> words) {
    std::vector<std::optional<int>> out;
    out.reserve(words.size());
    for (const auto& w : words)
        out.push_back(w.length() == c.n() ? c.decode(w.value()) : std::nullopt);
    return out;
}

}  // namespace tfc
