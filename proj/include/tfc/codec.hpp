#pragma once

// Stateful encoder / stateless decoder built from a domatic partition of a
// transition-free graph.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tfc/core.hpp"
#include "tfc/subdp.hpp"

namespace tfc {

/// Encoder table (message x state -> word) and decoder table (word -> message)
/// over a state set V*. Messages are 1-based.
class Codec {
public:
    /// encode[m-1][i] is the word sent for message m from state states[i].
    Codec(int n, ForbiddenPair fp, int message_count, std::vector<std::uint64_t> states,
          std::unordered_map<std::uint64_t, int> decode,
          std::vector<std::vector<std::uint64_t>> encode);

    int n() const noexcept { return n_; }
    const ForbiddenPair& fp() const noexcept { return fp_; }
    int message_count() const noexcept { return message_count_; }
    /// Sorted ascending.
    const std::vector<std::uint64_t>& states() const noexcept { return states_; }

    bool is_state(std::uint64_t word) const { return index_.contains(word); }
    std::optional<int> decode(std::uint64_t word) const;
    /// Throws InvalidArgument for unknown states or messages.
    std::uint64_t encode(int message, std::uint64_t state) const;

    /// Smallest state word.
    BitWord default_initial_state() const { return BitWord(n_, states_.front()); }
    double rate() const;

    /// Overwrites one decoder entry; for fault-injection tests.
    void set_decode(std::uint64_t word, int message);
    /// Overwrites one encoder entry; for fault-injection tests.
    void set_encode(int message, std::uint64_t state, std::uint64_t word);

    const std::unordered_map<std::uint64_t, int>& decode_table() const noexcept { return decode_; }

private:
    std::size_t state_index(std::uint64_t word) const;

    int n_;
    ForbiddenPair fp_;
    int message_count_;
    std::vector<std::uint64_t> states_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::unordered_map<std::uint64_t, int> decode_;
    std::vector<std::vector<std::uint64_t>> encode_;
};

/// The decoder maps each member to its class; the encoder sends, for message m
/// from state s, the smallest word of class m in the closed neighborhood of s.
/// The partition's parent graph must be G(fp, n).
Codec synthesize(const DomaticPartition& part, const ForbiddenPair& fp, int n);

struct ConsistencyReport {
    bool consistent = true;
    int message = 0;
    std::uint64_t state = 0;
    std::uint64_t word = 0;
    std::string reason;

    explicit operator bool() const noexcept { return consistent; }
};

/// Checks D(E(m,s)) = m, closure in V*, and transition freeness of (s, E(m,s))
/// for every message and state. Reports the first counterexample.
ConsistencyReport verify_consistency(const Codec& c);

/// Returns s_1..s_T with s_{i+1} = E(m_i, s_i), starting from s0.
std::vector<BitWord> encode_stream(const Codec& c, const BitWord& s0, std::span<const int> messages);

/// Elementwise decode; words outside V* yield nullopt and do not affect the
/// rest of the stream.
std::vector<std::optional<int>> decode_stream(const Codec& c, std::span<const BitWord> words);

}  // namespace tfc
