#include <map>

#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

Certificate verify_window_determinism_with(const Morphism& m, int k) {
    if (k < 1) throw std::invalid_argument("verify_window_determinism: k must be positive");
    if (m.domain_size() != 3) throw std::invalid_argument("verify_window_determinism: ternary domain required");
    detail::Timer timer;

    Certificate cert;
    cert.task = "window-determinism";
    cert.parameters = {{"k", k}, {"morphism", detail::morphism_json(m)}};

    // A 4-window of a non-repetitive sequence is itself square-free, so only
    // the 18 square-free windows delta can ever be observed.
    struct Entry {
        std::array<Symbol, 2> middle;
        std::array<Symbol, 4> delta;
    };
    std::map<std::string, Entry> table;
    std::uint64_t windows = 0;
    std::uint64_t subsequences = 0;

    for (int code = 0; code < 81; ++code) {
        std::array<Symbol, 4> delta{};
        int c = code;
        for (std::size_t i = 4; i-- > 0;) { delta[i] = Symbol(c % 3); c /= 3; }
        const Word delta_word(std::vector<Symbol>(delta.begin(), delta.end()), 3);
        if (find_square(delta_word)) continue;
        ++windows;
        const Word image = m.apply(delta_word);
        for (std::size_t d = 1; d <= std::size_t(k); ++d) {
            for (std::size_t s = 1; s <= d; ++s) {
                const Word content = d_subsequence(image, d, s);
                ++subsequences;
                std::string key;
                key.reserve(content.size() + 2);
                key.push_back(char(d));
                key.push_back(char(s));
                for (Symbol sym : content.symbols()) key.push_back(char(sym));
                const Entry entry{{delta[1], delta[2]}, delta};
                auto [it, inserted] = table.emplace(key, entry);
                if (!inserted && it->second.middle != entry.middle) {
                    cert.status = Certificate::Status::counterexample;
                    cert.witness = {
                        {"d", d},
                        {"start", s},
                        {"delta1", format_word(Word(std::vector<Symbol>(it->second.delta.begin(),
                                                                        it->second.delta.end()), 3))},
                        {"delta2", format_word(delta_word)},
                        {"content", format_word(content)},
                    };
                    cert.counts = {{"windows", windows}, {"subsequences", subsequences}};
                    cert.elapsed_seconds = timer.seconds();
                    return cert;
                }
            }
        }
    }

    cert.status = Certificate::Status::verified;
    cert.counts = {{"windows", windows}, {"subsequences", subsequences}, {"keys", table.size()}};
    cert.elapsed_seconds = timer.seconds();
    return cert;
}

Certificate verify_window_determinism(int k) {
    if (k < 2 || k > 8) throw std::invalid_argument("verify_window_determinism: k must be in 2..8");
    return verify_window_determinism_with(builtin_mu(k), k);
}

}  // namespace kthue
