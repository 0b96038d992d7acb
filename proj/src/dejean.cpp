#include "kthue/builtin.hpp"
#include "kthue/repetition.hpp"

namespace kthue {

namespace {

const Fraction kDejeanThreshold{7, 4};

// Lookahead of the extension probe. Rewrites of the lexicographically least
// (7/4)+-free word between consecutive lengths were measured at depth <= 5
// over the first few hundred lengths; 64 leaves a wide margin.
constexpr std::size_t kLookahead = 64;

}  // namespace

Word dejean_word(std::size_t n) {
    // One depth-first search in lexicographic order, resumed with a growing
    // target length. After the search first reaches length c + 1 + lookahead,
    // symbol c of the stream is final and gets committed; committed symbols
    // are never backtracked over. Every prefix of w has been validated by the
    // incremental exponent check, so the emitted word is (7/4)+-free.
    std::vector<Symbol> w;
    std::size_t committed = 0;
    while (committed < n) {
        const std::size_t target = committed + 1 + kLookahead;
        while (w.size() < target) {
            Symbol c = 0;
            while (true) {
                w.push_back(c);
                if (!exceeds_exponent_at_end(w, kDejeanThreshold)) break;
                c = Symbol(w.back() + 1);
                w.pop_back();
                while (c == 3) {
                    if (w.size() <= committed) {
                        throw std::logic_error("dejean_word: probe backtracked into committed prefix");
                    }
                    c = Symbol(w.back() + 1);
                    w.pop_back();
                }
            }
        }
        ++committed;
    }
    return Word(std::vector<Symbol>(w.begin(), w.begin() + n), 3);
}

}  // namespace kthue
