#ifndef CWSEQ_SEQUENCE_HPP
#define CWSEQ_SEQUENCE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cwseq {

/// Exact value m/2. Balancing values n(q-1)/2 and weight-bound endpoints
/// are half-integral whenever n(q-1) is odd, so they are never stored as
/// floating point.
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_halves(long long twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger from_whole(long long value) { return from_halves(2 * value); }

    constexpr long long numerator() const { return is_integral() ? twice_ / 2 : twice_; }
    constexpr long long denominator() const { return is_integral() ? 1 : 2; }
    constexpr bool is_integral() const { return twice_ % 2 == 0; }

    constexpr long long floor() const { return twice_ >= 0 ? twice_ / 2 : (twice_ - 1) / 2; }
    constexpr long long ceil() const { return twice_ >= 0 ? (twice_ + 1) / 2 : twice_ / 2; }
    /// Nearest integer, ties rounded up (3.5 -> 4).
    constexpr long long round_half_up() const { return (twice_ >= 0 ? twice_ + 1 : twice_) / 2; }

    constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

    /// "4" when integral, "3.5" otherwise (exact; the denominator is 2).
    std::string str() const;

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger a, long long b) { return a <=> from_whole(b); }
    friend constexpr bool operator==(HalfInteger a, long long b) { return a == from_whole(b); }
    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return from_halves(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
        return from_halves(a.twice_ - b.twice_);
    }

private:
    long long twice_ = 0;
};

/// Immutable q-ary word. Symbols are integers in [0, q-1]; the alphabet
/// size travels with the word so that cross-alphabet arithmetic fails
/// loudly instead of wrapping silently.
class Sequence {
public:
    Sequence() = default;  // empty binary word

    /// Validates every symbol against [0, q-1]. Throws DomainError.
    Sequence(std::vector<int> symbols, int q);

    static Sequence zeros(std::size_t len, int q);

    /// Text form: contiguous digits for q <= 10 ("2102"), comma-separated
    /// decimal symbols for larger alphabets ("11,0,3"). Rejects symbols >= q.
    static Sequence parse(std::string_view text, int q);

    int q() const { return q_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    /// Sub-word [pos, pos+len), same alphabet.
    Sequence slice(std::size_t pos, std::size_t len) const;

    /// Inverse of parse.
    std::string str() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<int> symbols_;
    int q_ = 2;
};

/// Symbol sum.
long long weight(const Sequence& s);

/// Element-wise (a_i + b_i) mod q. Throws DimensionError on length or
/// alphabet mismatch.
Sequence add_mod(const Sequence& a, const Sequence& b);

/// Element-wise (a_i - b_i) mod q; exact inverse of add_mod.
Sequence sub_mod(const Sequence& a, const Sequence& b);

/// [a|b] concatenation; alphabets must agree.
Sequence concat(const Sequence& a, const Sequence& b);

/// The balancing value of length-n q-ary words, n(q-1)/2, kept exact.
HalfInteger balancing_value(long long n, int q);

}  // namespace cwseq

#endif  // CWSEQ_SEQUENCE_HPP
