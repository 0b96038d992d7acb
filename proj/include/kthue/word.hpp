#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kthue {

/// Internal symbol encoding is 0-based; display mappings (digit offsets,
/// letter aliases) are a formatting concern, see format_word/parse_word.
using Symbol = std::uint8_t;

/// A finite sequence of symbols over a declared alphabet {0, ..., alphabet_size-1}.
///
/// Public indices follow the paper's convention x_1 ... x_n (1-based, at1());
/// storage is 0-based. Words are immutable values and safe to share across
/// threads.
class Word {
public:
    Word() = default;
    Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

    static Word from_digits(std::string_view digits, int display_offset = 0);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::size_t alphabet_size() const { return alphabet_; }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }  // 0-based
    Symbol at1(std::size_t i) const { return symbols_[i - 1]; }     // 1-based

    const std::vector<Symbol>& symbols() const { return symbols_; }

    /// w(i, j) of the paper: the factor from index i to j inclusive, 1-based.
    Word factor(std::size_t i, std::size_t j) const;

    bool operator==(const Word& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Word& other) const { return !(*this == other); }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_ = 0;
};

/// The d-subsequence x_start x_{start+d} x_{start+2d} ... up to the last index <= |w|.
/// `start` is 1-based; throws std::invalid_argument if out of range or d == 0.
Word d_subsequence(const Word& w, std::size_t d, std::size_t start);

/// The i-shift: x_{i+1} ... x_n x_1 ... x_i. Requires 0 <= i <= |w|.
Word shift(const Word& w, std::size_t i);

/// Circular sequence of order |phi| and length |phi|^2 * t:
/// (phi^0 phi^1 ... phi^{l-1}) repeated t times.
Word circular(const Word& phi, std::size_t t);

/// First n terms of the infinite periodic stream of zeta-blocks
/// shift(phi, 0), shift(phi, 1), ..., shift(phi, l-1), shift(phi, 0), ...
Word circular_prefix(const Word& phi, std::size_t n);

/// Wreathing of order l: alternating l-term blocks of base and wrap.
/// Requires |base| == |wrap| and l dividing |base|.
Word wreath(const Word& base, const Word& wrap, std::size_t ell);

struct CoveringBlocks {
    Word word;
    std::size_t first_block = 0;  // 0-based block indices
    std::size_t last_block = 0;
};

/// The covering subsequence of w(from, to) when w is composed of aligned
/// blocks of the given size: the smallest run of whole blocks containing it.
CoveringBlocks covering_subsequence(const Word& w, std::size_t block_size,
                                    std::size_t from, std::size_t to);

/// Thrown by parse_word with a 1-based column of the offending character.
class WordParseError : public std::runtime_error {
public:
    WordParseError(const std::string& message, std::size_t column);
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Text format: alphabets of size <= 10 render as a digit string (optionally
/// offset, e.g. 1-based for the kappa/lambda alphabets), larger alphabets as
/// whitespace-separated integers. One word per line.
std::string format_word(const Word& w, int display_offset = 0);

/// Exact inverse of format_word. alphabet_size 0 means "infer" (max symbol + 1).
Word parse_word(std::string_view text, int display_offset = 0, std::size_t alphabet_size = 0);

}  // namespace kthue
