#include "kthue/search.hpp"

#include <algorithm>
#include <sstream>

#include "kthue/repetition.hpp"
#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

namespace {

/// Square-free ternary words of length <= 3 over symbols {0..max_symbol}.
std::vector<std::vector<Symbol>> square_free_test_words(Symbol max_symbol) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> w;
    auto rec = [&](auto&& self) -> void {
        if (!w.empty()) out.push_back(w);
        if (w.size() == 3) return;
        for (Symbol c = 0; c <= max_symbol; ++c) {
            w.push_back(c);
            if (!has_square_ending_at(w, w.size())) self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return out;
}

struct Searcher {
    const SearchConfig& cfg;
    std::size_t alpha;
    std::size_t total;  // 3 * width
    std::vector<Symbol> slots;       // flattened images, assigned prefix
    std::vector<Symbol> max_used;    // max symbol used up to depth i (exclusive), 0xff = none
    std::uint64_t nodes = 0;
    std::map<std::string, std::uint64_t> pruning;

    // Suffix test words (last symbol = image being filled, earlier symbols
    // complete): one growing buffer per word, rebuilt on entering an image.
    struct SuffixCheck {
        std::vector<Symbol> context;  // images of the leading symbols
        std::vector<Symbol> buffer;   // context + partial current image
    };
    std::array<std::vector<SuffixCheck>, 3> suffix_checks;

    explicit Searcher(const SearchConfig& c)
        : cfg(c), alpha(c.alphabet_size), total(3 * c.width) {
        slots.assign(total, 0xff);
        max_used.assign(total + 1, 0xff);
    }

    Symbol image_of(std::size_t pos) const { return Symbol(pos / cfg.width); }

    Word image_word(Symbol c) const {
        auto begin = slots.begin() + c * cfg.width;
        return Word(std::vector<Symbol>(begin, begin + cfg.width), alpha);
    }

    Morphism current_morphism() const {
        return Morphism({image_word(0), image_word(1), image_word(2)});
    }

    void enter_image(Symbol c) {
        auto& checks = suffix_checks[c];
        checks.clear();
        if (c == 0) return;  // the lone suffix word "0" is the image itself
        for (const auto& u : square_free_test_words(Symbol(c - 1))) {
            if (u.size() >= 3) continue;  // suffix word length <= 3 including c
            SuffixCheck chk;
            for (Symbol s : u) {
                auto begin = slots.begin() + s * cfg.width;
                chk.context.insert(chk.context.end(), begin, begin + cfg.width);
            }
            chk.buffer = chk.context;
            checks.push_back(std::move(chk));
        }
    }

    /// Checks for symbol `sym` at flattened position `pos`; true if the
    /// partial assignment stays viable. Assumes positions < pos are assigned.
    bool place(std::size_t pos, Symbol sym) {
        slots[pos] = sym;
        max_used[pos + 1] = (max_used[pos] == 0xff || sym > max_used[pos]) ? sym : max_used[pos];
        const Symbol c = image_of(pos);
        const std::size_t j = pos - c * cfg.width;  // offset within image c
        if (j == 0) enter_image(c);

        // The image itself must stay k-Thue.
        {
            auto begin = slots.begin() + c * cfg.width;
            std::vector<Symbol> partial(begin, begin + j + 1);
            if (has_k_repetition_ending_at(partial, cfg.k, j + 1)) {
                ++pruning["image"];
                return false;
            }
        }
        // Concatenations ending in the growing image.
        for (auto& chk : suffix_checks[c]) {
            chk.buffer.resize(chk.context.size() + j);
            chk.buffer.push_back(sym);
            if (has_k_repetition_ending_at(chk.buffer, cfg.k, chk.buffer.size())) {
                ++pruning["pair"];
                return false;
            }
        }
        // On image completion, the remaining short test words become defined.
        if (j + 1 == cfg.width) {
            const Morphism partial({image_word(0),
                                    image_word(c >= 1 ? 1 : 0),
                                    image_word(c >= 2 ? 2 : 0)});
            for (const auto& u : square_free_test_words(c)) {
                if (std::find(u.begin(), u.end(), c) == u.end()) continue;
                if (is_k_thue(partial.apply(Word(u, 3)), cfg.k)) {
                    ++pruning["triple"];
                    return false;
                }
            }
        }
        return true;
    }

    std::optional<Symbol> pinned(std::size_t pos) const {
        const Symbol c = image_of(pos);
        const std::size_t j = pos - c * cfg.width;
        if (j < cfg.prefixes[c].size()) return cfg.prefixes[c][j];
        return std::nullopt;
    }

    Symbol candidate_limit(std::size_t pos) const {
        // Canonical (first-appearance) ordering: a new symbol may only be the
        // next unused one.
        const Symbol mu = max_used[pos];
        const Symbol next = mu == 0xff ? 0 : Symbol(mu + 1);
        return Symbol(std::min<std::size_t>(next, alpha - 1));
    }

    /// DFS over positions [from, to); calls leaf() for every assignment
    /// reaching `to`. Returns false if leaf() asked to stop.
    bool dfs(std::size_t from, std::size_t to, const std::function<bool()>& leaf) {
        if (from == to) return leaf();
        const auto pin = pinned(from);
        const Symbol limit = candidate_limit(from);
        for (Symbol sym = pin.value_or(0); sym <= (pin ? *pin : limit); ++sym) {
            if (pin && sym > limit) break;  // constraint incompatible with canonical order
            if (place(from, sym)) {
                ++nodes;
                if (!dfs(from + 1, to, leaf)) return false;
            }
        }
        slots[from] = 0xff;
        return true;
    }
};

std::string config_fingerprint(const SearchConfig& cfg) {
    std::ostringstream out;
    out << "k=" << cfg.k << ",w=" << cfg.width << ",a=" << cfg.alphabet_size
        << ",L=" << cfg.test_length << ",P=" << cfg.partition_depth << ",pre=";
    for (const auto& p : cfg.prefixes) {
        for (Symbol s : p) out << int(s);
        out << '.';
    }
    return out.str();
}

}  // namespace

Morphism canonicalize(const Morphism& m) {
    std::vector<Symbol> relabel(m.codomain_alphabet_size(), 0xff);
    Symbol next = 0;
    for (const Word& im : m.images()) {
        for (Symbol s : im.symbols()) {
            if (relabel[s] == 0xff) relabel[s] = next++;
        }
    }
    for (Symbol& r : relabel) {
        if (r == 0xff) r = next++;
    }
    std::vector<Word> images;
    for (const Word& im : m.images()) {
        std::vector<Symbol> syms;
        syms.reserve(im.size());
        for (Symbol s : im.symbols()) syms.push_back(relabel[s]);
        images.emplace_back(std::move(syms), m.codomain_alphabet_size());
    }
    return Morphism(std::move(images));
}

bool passes_filters(const Morphism& m, int k, std::size_t L) {
    if (verify_bounded_images_with(m, k, L).status != Certificate::Status::verified) return false;
    return verify_window_determinism_with(m, k).status == Certificate::Status::verified;
}

SearchResult search_morphisms(const SearchConfig& config,
                              const std::function<void(const Morphism&)>& sink) {
    SearchConfig cfg = config;
    if (cfg.alphabet_size == 0) cfg.alphabet_size = std::size_t(cfg.k) + 2;
    if (cfg.k < 1) throw std::invalid_argument("search: k must be positive");
    if (cfg.width < 1) throw std::invalid_argument("search: width must be positive");
    if (cfg.alphabet_size < 2 || cfg.alphabet_size > 10) {
        throw std::invalid_argument("search: alphabet size must be in 2..10");
    }
    if (cfg.test_length < 4) throw std::invalid_argument("search: test length must be >= 4");
    for (const auto& p : cfg.prefixes) {
        if (p.size() > cfg.width) throw std::invalid_argument("search: prefix longer than width");
        for (Symbol s : p) {
            if (s >= cfg.alphabet_size) throw std::invalid_argument("search: prefix symbol outside alphabet");
        }
    }

    const std::size_t total = 3 * cfg.width;
    const std::size_t split = std::min(cfg.partition_depth, total);

    std::size_t resume_from = 0;
    if (!cfg.resume_token.empty()) {
        const std::string expect = "kthue-search/v1;" + config_fingerprint(cfg) + ";task=";
        if (cfg.resume_token.rfind(expect, 0) != 0) {
            throw std::invalid_argument("search: resume token does not match this configuration");
        }
        resume_from = std::stoul(cfg.resume_token.substr(expect.size()));
    }

    SearchResult result;

    // Stage A: enumerate viable canonical prefixes of the flattened assignment.
    Searcher rootsearch(cfg);
    std::vector<std::vector<Symbol>> tasks;
    rootsearch.dfs(0, split, [&] {
        tasks.emplace_back(rootsearch.slots.begin(), rootsearch.slots.begin() + split);
        return true;
    });
    result.nodes = rootsearch.nodes;
    result.pruning = rootsearch.pruning;

    struct TaskResult {
        std::vector<Morphism> found;
        std::uint64_t nodes = 0;
        std::map<std::string, std::uint64_t> pruning;
        bool done = false;
    };
    std::vector<TaskResult> per_task(tasks.size());
    std::atomic<std::uint64_t> completed_nodes{result.nodes};

    detail::run_tasks(
        cfg.jobs, tasks.size(),
        [&](std::size_t i) {
            if (i < resume_from) {  // already covered by the checkpointed run
                per_task[i].done = true;
                return;
            }
            Searcher search(cfg);
            // Replay the prefix; all placements were validated in stage A.
            for (std::size_t p = 0; p < split; ++p) {
                if (!search.place(p, tasks[i][p])) return;  // unreachable
            }
            search.dfs(split, total, [&] {
                Morphism candidate = search.current_morphism();
                if (verify_bounded_images_with(candidate, cfg.k, cfg.test_length).status !=
                    Certificate::Status::verified) {
                    ++search.pruning["bounded"];
                    return true;
                }
                if (verify_window_determinism_with(candidate, cfg.k).status !=
                    Certificate::Status::verified) {
                    ++search.pruning["window"];
                    return true;
                }
                per_task[i].found.push_back(std::move(candidate));
                return true;
            });
            per_task[i].nodes = search.nodes;
            per_task[i].pruning = std::move(search.pruning);
            per_task[i].done = true;
            completed_nodes.fetch_add(search.nodes);
        },
        [&] { return cfg.node_budget > 0 && completed_nodes.load() >= cfg.node_budget; });

    // Deterministic merge over a contiguous task prefix.
    std::uint64_t merged_nodes = result.nodes;
    std::size_t merged = 0;
    for (std::size_t i = 0; i < per_task.size(); ++i) {
        if (!per_task[i].done) break;
        if (cfg.node_budget > 0 && i >= resume_from && merged_nodes >= cfg.node_budget) break;
        for (const Morphism& m : per_task[i].found) {
            if (sink) sink(m);
            result.morphisms.push_back(m);
        }
        merged_nodes += per_task[i].nodes;
        for (const auto& [stage, count] : per_task[i].pruning) result.pruning[stage] += count;
        ++merged;
    }
    result.nodes = merged_nodes;
    if (merged < tasks.size()) {
        result.checkpoint = "kthue-search/v1;" + config_fingerprint(cfg) +
                            ";task=" + std::to_string(merged);
        result.exhausted = false;
    } else {
        result.exhausted = true;
    }
    return result;
}

}  // namespace kthue
