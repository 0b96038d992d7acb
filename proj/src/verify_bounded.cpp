#include <mutex>

#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

namespace {

constexpr std::size_t kPartitionDepth = 5;

struct Violation {
    std::vector<Symbol> word;
    RepetitionWitness witness;
};

/// Per-subtree DFS state: the ternary word and its image, grown and shrunk in
/// lock step. Checks are incremental: a new ternary symbol must keep the word
/// square-free, and each of the `width` new image positions must not complete
/// a repetition in any d-subsequence, d <= k.
struct BoundedSearch {
    const Morphism& m;
    std::size_t k;
    std::size_t max_len;
    std::size_t width;
    std::vector<Symbol> word;
    std::vector<Symbol> img;
    std::vector<std::uint64_t> words_by_length;  // index = length, 1-based
    std::optional<Violation> violation;

    BoundedSearch(const Morphism& morphism, std::size_t k_, std::size_t max_len_)
        : m(morphism), k(k_), max_len(max_len_), width(*morphism.uniform_width()),
          words_by_length(max_len_ + 1, 0) {}

    void seed(const std::vector<Symbol>& prefix) {
        word = prefix;
        img.clear();
        for (Symbol s : prefix) {
            const auto& block = m.image(s).symbols();
            img.insert(img.end(), block.begin(), block.end());
        }
    }

    bool push(Symbol c) {
        word.push_back(c);
        if (has_square_ending_at(word, word.size())) {
            word.pop_back();
            return false;
        }
        const auto& block = m.image(c).symbols();
        img.insert(img.end(), block.begin(), block.end());
        for (std::size_t q = img.size() - width + 1; q <= img.size(); ++q) {
            if (auto rep = detail::repetition_ending_at(img, k, q)) {
                violation = Violation{word, *rep};
                return true;  // keep state; caller stops
            }
        }
        ++words_by_length[word.size()];
        return true;
    }

    void pop() {
        word.pop_back();
        img.resize(img.size() - width);
    }

    /// Exhausts extensions of the current word up to max_len (lexicographic).
    void dfs() {
        if (violation || word.size() >= max_len) return;
        for (Symbol c = 0; c < 3; ++c) {
            if (push(c)) {
                dfs();
                if (violation) return;
                pop();
            }
        }
    }

    /// Enumerates this subtree only down to `depth`, appending each surviving
    /// word of exactly that length to `out`.
    void enumerate_prefixes(std::size_t depth, std::vector<std::vector<Symbol>>& out) {
        if (violation) return;
        if (word.size() == depth) {
            out.push_back(word);
            return;
        }
        for (Symbol c = 0; c < 3; ++c) {
            if (push(c)) {
                enumerate_prefixes(depth, out);
                if (violation) return;
                pop();
            }
        }
    }

    std::uint64_t nodes() const {
        std::uint64_t n = 0;
        for (auto v : words_by_length) n += v;
        return n;
    }
};

}  // namespace

Certificate verify_bounded_images_with(const Morphism& m, int k, std::size_t max_len,
                                       const VerifyOptions& opt) {
    if (k < 1) throw std::invalid_argument("verify_bounded_images: k must be positive");
    if (max_len < 1) throw std::invalid_argument("verify_bounded_images: max_len must be >= 1");
    if (!m.uniform_width()) throw std::invalid_argument("verify_bounded_images: morphism must be uniform");
    if (m.domain_size() != 3) throw std::invalid_argument("verify_bounded_images: ternary domain required");
    detail::Timer timer;

    Certificate cert;
    cert.task = "bounded-images";
    cert.parameters = {{"k", k}, {"max_len", max_len}, {"morphism", detail::morphism_json(m)}};

    const std::size_t split = std::min(kPartitionDepth, max_len);

    // Stage A (serial): everything up to the partition depth.
    BoundedSearch root(m, std::size_t(k), max_len);
    root.seed({});
    std::vector<std::vector<Symbol>> prefixes;
    root.enumerate_prefixes(split, prefixes);

    auto finish = [&](Certificate::Status status, const std::optional<Violation>& viol,
                      const std::vector<std::uint64_t>& by_length, std::uint64_t nodes,
                      std::size_t tasks_done, std::size_t tasks_total) {
        cert.status = status;
        if (viol) {
            cert.witness = detail::witness_json(viol->witness);
            cert.witness["word"] = format_word(Word(viol->word, 3));
        }
        nlohmann::json lengths = nlohmann::json::array();
        for (std::size_t len = 1; len < by_length.size(); ++len) lengths.push_back(by_length[len]);
        cert.counts = {{"nodes", nodes},
                       {"words_by_length", lengths},
                       {"tasks_done", tasks_done},
                       {"tasks_total", tasks_total}};
        cert.elapsed_seconds = timer.seconds();
        return cert;
    };

    if (root.violation) {
        return finish(Certificate::Status::counterexample, root.violation,
                      root.words_by_length, root.nodes(), 0, prefixes.size());
    }
    if (max_len <= split) {
        return finish(Certificate::Status::verified, std::nullopt,
                      root.words_by_length, root.nodes(), 0, 0);
    }

    // Stage B (parallel): one task per surviving prefix, claimed in
    // lexicographic order; results merged over a deterministic task prefix.
    struct TaskResult {
        std::vector<std::uint64_t> by_length;
        std::optional<Violation> violation;
        std::uint64_t nodes = 0;
        bool done = false;
    };
    std::vector<TaskResult> results(prefixes.size());
    std::atomic<std::uint64_t> completed_nodes{root.nodes()};
    std::atomic<bool> found{false};

    detail::run_tasks(
        opt.jobs, prefixes.size(),
        [&](std::size_t i) {
            BoundedSearch search(m, std::size_t(k), max_len);
            search.seed(prefixes[i]);
            search.dfs();
            results[i].by_length = search.words_by_length;
            results[i].violation = search.violation;
            results[i].nodes = search.nodes();
            results[i].done = true;
            completed_nodes.fetch_add(search.nodes());
            if (search.violation) found.store(true);
        },
        [&] {
            if (found.load()) return true;
            return opt.node_budget > 0 && completed_nodes.load() >= opt.node_budget;
        });

    // Deterministic merge: walk tasks in order until budget cutoff, an
    // unfinished task, or a violation.
    std::vector<std::uint64_t> by_length = root.words_by_length;
    std::uint64_t nodes = root.nodes();
    std::optional<Violation> viol;
    std::size_t tasks_done = 0;
    bool aborted = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].done) { aborted = true; break; }
        if (opt.node_budget > 0 && nodes >= opt.node_budget) { aborted = true; break; }
        for (std::size_t len = 0; len < by_length.size(); ++len) {
            by_length[len] += results[i].by_length[len];
        }
        nodes += results[i].nodes;
        ++tasks_done;
        if (results[i].violation) { viol = results[i].violation; break; }
    }
    Certificate::Status status = viol ? Certificate::Status::counterexample
                                : aborted ? Certificate::Status::aborted
                                          : Certificate::Status::verified;
    return finish(status, viol, by_length, nodes, tasks_done, prefixes.size());
}

Certificate verify_bounded_images(int k, std::size_t max_len, const VerifyOptions& opt) {
    if (k < 2 || k > 8) throw std::invalid_argument("verify_bounded_images: k must be in 2..8");
    return verify_bounded_images_with(builtin_mu(k), k, max_len, opt);
}

}  // namespace kthue
