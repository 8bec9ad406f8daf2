#include "tfc/core.hpp"

#include <bit>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void require_same_length(const BitWord& x, const BitWord& y) {
    if (x.length() != y.length())
        throw InvalidArgument("word length mismatch: " + std::to_string(x.length()) + " vs " +
                              std::to_string(y.length()));
}

}  // namespace

BitWord::BitWord(int length, std::uint64_t value) : length_(length), value_(value) {
    if (length < 1 || length > kMaxLength)
        throw InvalidArgument("word length must be in [1, 64], got " + std::to_string(length));
    if (value & ~low_mask(length))
        throw InvalidArgument("value has bits above word length " + std::to_string(length));
}

BitWord BitWord::parse(std::string_view bits) {
    if (bits.empty()) throw InvalidArgument("empty bit string");
    if (bits.size() > static_cast<std::size_t>(kMaxLength))
        throw InvalidArgument("bit string longer than 64: " + std::string(bits));
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw InvalidArgument("bit string may only contain '0' and '1': " + std::string(bits));
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitWord(static_cast<int>(bits.size()), v);
}

int BitWord::bit(int position) const {
    if (position < 1 || position > length_)
        throw InvalidArgument("bit position out of range: " + std::to_string(position));
    return static_cast<int>((value_ >> (length_ - position)) & 1u);
}

std::string BitWord::to_string() const { return to_bit_string(value_, length_); }

std::string to_bit_string(std::uint64_t value, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i)
        if ((value >> (length - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

ForbiddenPair::ForbiddenPair(BitWord p, BitWord q) : p_(p), q_(q) {
    if (p.length() != q.length())
        throw InvalidArgument("patterns p and q must have equal length");
    if (p.length() < 2)
        throw InvalidArgument("pattern length k must be at least 2");
    if (p == q) throw InvalidArgument("patterns p and q must differ");
}

ForbiddenPair ForbiddenPair::parse(std::string_view p, std::string_view q) {
    return ForbiddenPair(BitWord::parse(p), BitWord::parse(q));
}

std::uint64_t window_match_mask(std::uint64_t word, int length, const BitWord& pattern) {
    const int k = pattern.length();
    if (length < k) return 0;
    std::uint64_t mask = low_mask(length - k + 1);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t shifted = word >> j;
        mask &= ((pattern.value() >> j) & 1u) ? shifted : ~shifted;
    }
    return mask;
}

WindowMasks window_masks(std::uint64_t word, int length, const ForbiddenPair& fp) {
    return {window_match_mask(word, length, fp.p()), window_match_mask(word, length, fp.q())};
}

bool is_violating(std::uint64_t x, std::uint64_t y, int length, const ForbiddenPair& fp) {
    return masks_violate(window_masks(x, length, fp), window_masks(y, length, fp));
}

bool is_violating(const BitWord& x, const BitWord& y, const ForbiddenPair& fp) {
    require_same_length(x, y);
    return is_violating(x.value(), y.value(), x.length(), fp);
}

bool is_transition_free(const BitWord& x, const BitWord& y, const ForbiddenPair& fp) {
    return !is_violating(x, y, fp);
}

int first_violation(const BitWord& x, const BitWord& y, const ForbiddenPair& fp) {
    require_same_length(x, y);
    const WindowMasks a = window_masks(x.value(), x.length(), fp);
    const WindowMasks b = window_masks(y.value(), y.length(), fp);
    const std::uint64_t hits = (a.p & b.q) | (a.q & b.p);
    if (!hits) return 0;
    // Leftmost window = highest shift.
    const int shift = 63 - std::countl_zero(hits);
    return x.length() - fp.k() - shift + 1;
}

bool is_sequence_transition_free(std::span<const BitWord> words, const ForbiddenPair& fp) {
    for (std::size_t i = 1; i < words.size(); ++i) require_same_length(words[0], words[i]);
    for (std::size_t i = 1; i < words.size(); ++i)
        if (is_violating(words[i - 1], words[i], fp)) return false;
    return true;
}

}  // namespace tfc
