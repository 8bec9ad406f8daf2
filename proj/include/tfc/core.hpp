#pragma once

// Binary words, forbidden transition pairs and the violation predicate.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tfc {

/// Binary word of 1..64 bits. Position 1 is the leftmost bit, which is held
/// in the most significant used bit of value(), so value() is the big-endian
/// integer reading of the word.
class BitWord {
public:
    static constexpr int kMaxLength = 64;

    BitWord(int length, std::uint64_t value);

    /// Parses a string of '0'/'1' characters, leftmost bit first.
    static BitWord parse(std::string_view bits);

    int length() const noexcept { return length_; }
    std::uint64_t value() const noexcept { return value_; }

    /// 1-based position, 1 = leftmost.
    int bit(int position) const;

    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend auto operator<=>(const BitWord&, const BitWord&) = default;

private:
    int length_;
    std::uint64_t value_;
};

std::string to_bit_string(std::uint64_t value, int length);

/// Pattern pair (p, q) of common length k >= 2, p != q.
class ForbiddenPair {
public:
    ForbiddenPair(BitWord p, BitWord q);
    static ForbiddenPair parse(std::string_view p, std::string_view q);

    int k() const noexcept { return p_.length(); }
    const BitWord& p() const noexcept { return p_; }
    const BitWord& q() const noexcept { return q_; }

    /// The same constraint with the roles of p and q exchanged.
    ForbiddenPair swapped() const { return ForbiddenPair(q_, p_); }

    friend bool operator==(const ForbiddenPair&, const ForbiddenPair&) = default;

private:
    BitWord p_;
    BitWord q_;
};

/// Bit s of the result is set iff the k-bit window of `word` starting
/// s bits above the least significant end equals `pattern`. Only shifts
/// 0..length-k are considered; empty when length < k.
std::uint64_t window_match_mask(std::uint64_t word, int length, const BitWord& pattern);

/// Precomputed p/q window masks of one word; two words violate iff
/// (a.p & b.q) | (a.q & b.p) is nonzero.
struct WindowMasks {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};
WindowMasks window_masks(std::uint64_t word, int length, const ForbiddenPair& fp);

inline bool masks_violate(const WindowMasks& a, const WindowMasks& b) noexcept {
    return ((a.p & b.q) | (a.q & b.p)) != 0;
}

/// True iff some window of x and y at the same positions reads (p,q) or (q,p).
bool is_violating(const BitWord& x, const BitWord& y, const ForbiddenPair& fp);
bool is_transition_free(const BitWord& x, const BitWord& y, const ForbiddenPair& fp);

/// Raw-value variant for hot loops; both words have `length` bits.
bool is_violating(std::uint64_t x, std::uint64_t y, int length, const ForbiddenPair& fp);

/// 1-based start of the first violating window, or 0 when the pair is free.
int first_violation(const BitWord& x, const BitWord& y, const ForbiddenPair& fp);

/// Every consecutive pair is transition free. Vacuously true for size <= 1.
bool is_sequence_transition_free(std::span<const BitWord> words, const ForbiddenPair& fp);

}  // namespace tfc
