#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

namespace {

struct TightnessSearch {
    std::size_t k;
    Symbol alphabet;
    std::vector<Symbol> word;
    std::vector<Symbol> longest;
    std::uint64_t nodes = 0;

    void dfs() {
        if (word.size() > longest.size()) longest = word;
        for (Symbol c = 0; c < alphabet; ++c) {
            word.push_back(c);
            if (!has_k_repetition_ending_at(word, k, word.size())) {
                ++nodes;
                dfs();
            }
            word.pop_back();
        }
    }
};

}  // namespace

Certificate verify_tightness(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("verify_tightness: k must be in 1..8");
    detail::Timer timer;

    // Every k-Thue word over k+1 symbols extends only finitely (the paper's
    // bound: length >= 2k+2 forces a repetition), so the search space is a
    // finite tree and the DFS exhausts it.
    TightnessSearch search{std::size_t(k), Symbol(k + 1), {}, {}, 0};
    search.dfs();

    const std::size_t expected = 2 * std::size_t(k) + 1;
    Certificate cert;
    cert.task = "tightness";
    cert.parameters = {{"k", k}, {"alphabet", k + 1}, {"expected_max_length", expected}};
    cert.status = search.longest.size() == expected ? Certificate::Status::verified
                                                    : Certificate::Status::counterexample;
    cert.witness = {{"longest_word", format_word(Word(search.longest, std::size_t(k) + 1))}};
    cert.counts = {{"nodes", search.nodes}, {"max_length", search.longest.size()}};
    cert.elapsed_seconds = timer.seconds();
    return cert;
}

}  // namespace kthue
