#include "kthue/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kthue {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_(alphabet_size) {
    for (Symbol s : symbols_) {
        if (s >= alphabet_) {
            throw std::invalid_argument("Word: symbol " + std::to_string(int(s)) +
                                        " outside alphabet of size " + std::to_string(alphabet_));
        }
    }
}

Word Word::from_digits(std::string_view digits, int display_offset) {
    return parse_word(digits, display_offset);
}

Word Word::factor(std::size_t i, std::size_t j) const {
    if (i < 1 || j < i || j > size()) {
        throw std::invalid_argument("Word::factor: indices out of range");
    }
    return Word(std::vector<Symbol>(symbols_.begin() + (i - 1), symbols_.begin() + j), alphabet_);
}

Word d_subsequence(const Word& w, std::size_t d, std::size_t start) {
    if (d == 0) throw std::invalid_argument("d_subsequence: d must be positive");
    if (start < 1 || start > w.size()) {
        throw std::invalid_argument("d_subsequence: start out of range");
    }
    std::vector<Symbol> out;
    out.reserve((w.size() - start) / d + 1);
    for (std::size_t p = start; p <= w.size(); p += d) out.push_back(w.at1(p));
    return Word(std::move(out), w.alphabet_size());
}

Word shift(const Word& w, std::size_t i) {
    if (i > w.size()) throw std::invalid_argument("shift: i out of range");
    std::vector<Symbol> out;
    out.reserve(w.size());
    out.insert(out.end(), w.symbols().begin() + i, w.symbols().end());
    out.insert(out.end(), w.symbols().begin(), w.symbols().begin() + i);
    return Word(std::move(out), w.alphabet_size());
}

Word circular(const Word& phi, std::size_t t) {
    if (phi.empty()) throw std::invalid_argument("circular: phi must be nonempty");
    if (t == 0) throw std::invalid_argument("circular: t must be positive");
    const std::size_t l = phi.size();
    std::vector<Symbol> out;
    out.reserve(l * l * t);
    for (std::size_t rep = 0; rep < t; ++rep) {
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) out.push_back(phi[(i + j) % l]);
        }
    }
    return Word(std::move(out), phi.alphabet_size());
}

Word circular_prefix(const Word& phi, std::size_t n) {
    if (n == 0) return Word({}, phi.alphabet_size());
    if (phi.empty()) throw std::invalid_argument("circular_prefix: phi must be nonempty");
    const std::size_t l = phi.size();
    std::vector<Symbol> out;
    out.reserve(n);
    for (std::size_t block = 0; out.size() < n; ++block) {
        const std::size_t sh = block % l;
        for (std::size_t j = 0; j < l && out.size() < n; ++j) out.push_back(phi[(sh + j) % l]);
    }
    return Word(std::move(out), phi.alphabet_size());
}

Word wreath(const Word& base, const Word& wrap, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("wreath: order must be positive");
    if (base.size() != wrap.size()) throw std::invalid_argument("wreath: length mismatch");
    if (base.size() % ell != 0) throw std::invalid_argument("wreath: order must divide length");
    std::vector<Symbol> out;
    out.reserve(2 * base.size());
    for (std::size_t q = 0; q < base.size() / ell; ++q) {
        for (std::size_t r = 0; r < ell; ++r) out.push_back(base[q * ell + r]);
        for (std::size_t r = 0; r < ell; ++r) out.push_back(wrap[q * ell + r]);
    }
    return Word(std::move(out), std::max(base.alphabet_size(), wrap.alphabet_size()));
}

CoveringBlocks covering_subsequence(const Word& w, std::size_t block_size,
                                    std::size_t from, std::size_t to) {
    if (block_size == 0 || w.size() % block_size != 0) {
        throw std::invalid_argument("covering_subsequence: block size must divide length");
    }
    if (from < 1 || to < from || to > w.size()) {
        throw std::invalid_argument("covering_subsequence: indices out of range");
    }
    const std::size_t first = (from - 1) / block_size;
    const std::size_t last = (to - 1) / block_size;
    return CoveringBlocks{w.factor(first * block_size + 1, (last + 1) * block_size), first, last};
}

WordParseError::WordParseError(const std::string& message, std::size_t column)
    : std::runtime_error(message), column_(column) {}

std::string format_word(const Word& w, int display_offset) {
    std::string out;
    if (w.alphabet_size() + static_cast<std::size_t>(display_offset) <= 10) {
        out.reserve(w.size());
        for (Symbol s : w.symbols()) out.push_back(char('0' + s + display_offset));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(int(w[i]) + display_offset);
        }
    }
    return out;
}

Word parse_word(std::string_view text, int display_offset, std::size_t alphabet_size) {
    std::vector<Symbol> syms;
    const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (spaced) {
        std::size_t col = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) { ++i; ++col; }
            if (i >= text.size()) break;
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            int value = 0;
            try {
                value = std::stoi(std::string(text.substr(start, i - start)));
            } catch (const std::exception&) {
                throw WordParseError("not an integer", col);
            }
            value -= display_offset;
            if (value < 0 || value > 255) throw WordParseError("symbol out of range", col);
            syms.push_back(static_cast<Symbol>(value));
            col += i - start;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '\r') continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw WordParseError(std::string("unexpected character '") + c + "'", i + 1);
            }
            int value = (c - '0') - display_offset;
            if (value < 0) throw WordParseError("symbol below display offset", i + 1);
            syms.push_back(static_cast<Symbol>(value));
        }
    }
    std::size_t alpha = alphabet_size;
    if (alpha == 0) {
        for (Symbol s : syms) alpha = std::max<std::size_t>(alpha, std::size_t(s) + 1);
        if (alpha == 0) alpha = 1;
    }
    return Word(std::move(syms), alpha);
}

}  // namespace kthue
