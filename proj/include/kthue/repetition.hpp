#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "kthue/word.hpp"

namespace kthue {

/// Exact rational with nonnegative numerator and positive denominator.
/// Exponent thresholds like 7/4 must never go through floating point.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);

    static Fraction parse(std::string_view text);  // "7/4" or "2"

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    std::string str() const;
};

/// A square w(start .. start+t-1) == w(start+t .. start+2t-1); start is 1-based.
struct SquareWitness {
    std::size_t start = 0;
    std::size_t half_length = 0;
};

/// A square of half-length `half_length` in the d-subsequence beginning at
/// `start` (1-based index into the original word).
struct RepetitionWitness {
    std::size_t d = 0;
    std::size_t start = 0;
    std::size_t half_length = 0;
};

/// Locates a factor pi.epsilon with epsilon a prefix of pi.epsilon;
/// exponent = total_length / pi_length, exact.
struct ExponentWitness {
    std::size_t start = 0;  // 1-based
    std::size_t pi_length = 0;
    std::size_t total_length = 0;

    Fraction exponent() const {
        return Fraction(static_cast<long long>(total_length), static_cast<long long>(pi_length));
    }
};

/// Minimal (start, then half_length) square of consecutive terms, if any.
/// Absent result means w is Thue (square-free).
std::optional<SquareWitness> find_square(const Word& w);

/// Absent iff every d-subsequence of w is square-free for all 1 <= d <= k.
/// Otherwise the lexicographically first witness by (d, start, half_length).
/// Checking the d start-residues 1..d suffices: a square in a later-start
/// subsequence appears in its residue-class subsequence.
std::optional<RepetitionWitness> is_k_thue(const Word& w, std::size_t k);

/// Maximum of |pi.eps|/|pi| over all factors of w with eps a prefix of pi.eps.
/// A word of all-distinct symbols has exponent 1. Requires |w| >= 1.
ExponentWitness max_exponent(const Word& w);

/// Absent iff no factor has exponent strictly greater than q (q >= 1).
std::optional<ExponentWitness> is_q_plus_free(const Word& w, const Fraction& q);

// Incremental checks used by the search and verification engines. They look
// only at repetitions whose last term is the stated position, so a word built
// up one symbol (or one image block) at a time is fully covered by running
// them at each appended position.

/// Any square of consecutive terms whose second half ends exactly at `pos` (1-based)?
bool has_square_ending_at(const std::vector<Symbol>& w, std::size_t pos);

/// Any square in any d-subsequence, d <= k, whose last term is exactly `pos`?
bool has_k_repetition_ending_at(const std::vector<Symbol>& w, std::size_t k, std::size_t pos);

/// Any factor ending at the last position with exponent > q?
bool exceeds_exponent_at_end(const std::vector<Symbol>& w, const Fraction& q);

}  // namespace kthue
