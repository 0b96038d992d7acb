#include <algorithm>
#include <map>
#include <set>

#include "kthue/repetition.hpp"
#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

namespace {

const char* kKappaNames[] = {"K1", "K2", "K3", "K4", "K5", "K6",
                             "K7", "K8", "K9", "K10", "K11", "K12"};
const char* kLambdaNames[] = {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"};

std::string aux_str(AuxSymbol a) {
    return std::to_string(int(a.letter)) + (a.mark == Mark::over ? "o" : "u");
}

std::string aux_word_str(const std::array<AuxSymbol, 3>& w) {
    return aux_str(w[0]) + aux_str(w[1]) + aux_str(w[2]);
}

using Block3 = std::array<Symbol, 3>;
using Block4 = std::array<Symbol, 4>;

template <std::size_t N>
std::string block_str(const std::array<Symbol, N>& b) {
    std::string out;
    for (Symbol s : b) out.push_back(char('1' + s));  // display offset 1
    return out;
}

template <std::size_t N>
std::vector<std::array<Symbol, N>> aligned_blocks(const Word& w) {
    std::vector<std::array<Symbol, N>> out(w.size() / N);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < N; ++j) out[i][j] = w[i * N + j];
    }
    return out;
}

template <std::size_t N>
bool blocks_concat_square_free(const std::array<Symbol, N>& a, const std::array<Symbol, N>& b) {
    std::vector<Symbol> cat(a.begin(), a.end());
    cat.insert(cat.end(), b.begin(), b.end());
    return !find_square(Word(cat, N)).has_value();
}

nlohmann::json fail(const char* property, nlohmann::json detail) {
    detail["property"] = property;
    return detail;
}

// ---------------- kappa properties ----------------

struct KappaContext {
    const KappaTable& table;
    std::size_t t;
    AuxWord aux;          // kappa^t over the marked alphabet
    AuxWord aux_prev;     // kappa^{t-1}
    Word projected;       // pi(kappa^t)
    std::vector<Block3> blocks;

    // Unordered adjacency between block contents, from consecutive occurrences.
    std::set<std::pair<Block3, Block3>> adjacency;
    std::set<Block3> occurring;

    explicit KappaContext(const KappaTable& tab, std::size_t t_) : table(tab), t(t_) {
        aux = kappa_iterate_with(table, t);
        aux_prev = kappa_iterate_with(table, t ? t - 1 : 0);
        projected = project(aux);
        blocks = aligned_blocks<3>(projected);
        for (const Block3& b : blocks) occurring.insert(b);
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
            if (blocks[i] != blocks[i + 1]) {
                adjacency.insert(std::minmax(blocks[i], blocks[i + 1]));
            }
        }
    }

    bool adjacent(const Block3& a, const Block3& b) const {
        return adjacency.count(std::minmax(a, b)) > 0;
    }

    std::vector<Block3> neighbors(const Block3& b) const {
        std::vector<Block3> out;
        for (const auto& [x, y] : adjacency) {
            if (x == b) out.push_back(y);
            if (y == b) out.push_back(x);
        }
        return out;
    }
};

std::optional<nlohmann::json> check_kappa(const KappaContext& ctx, KappaProperty p) {
    const auto& bl = ctx.blocks;
    const std::size_t nb = bl.size();
    switch (p) {
        case KappaProperty::K1:
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                if (!blocks_concat_square_free(bl[i], bl[i + 1])) {
                    return fail("K1", {{"block_index", i},
                                       {"pair", block_str(bl[i]) + " " + block_str(bl[i + 1])}});
                }
            }
            return std::nullopt;
        case KappaProperty::K2: {
            std::size_t expected = 1;
            for (std::size_t i = 0; i < ctx.t; ++i) expected *= 3;
            if (ctx.projected.size() != expected) {
                return fail("K2", {{"length", ctx.projected.size()}, {"expected", expected}});
            }
            for (std::size_t i = 0; i < nb; ++i) {
                const auto& im = ctx.table[aux_index(ctx.aux_prev[i])];
                for (std::size_t j = 0; j < 3; ++j) {
                    if (!(ctx.aux[3 * i + j] == im[j])) {
                        return fail("K2", {{"block_index", i},
                                           {"block", aux_word_str({ctx.aux[3 * i], ctx.aux[3 * i + 1],
                                                                   ctx.aux[3 * i + 2]})}});
                    }
                }
            }
            return std::nullopt;
        }
        case KappaProperty::K3:
            for (std::size_t i = 0; i < nb; ++i) {
                Block3 sorted = bl[i];
                std::sort(sorted.begin(), sorted.end());
                if (sorted != Block3{0, 1, 2}) {
                    return fail("K3", {{"block_index", i}, {"block", block_str(bl[i])}});
                }
            }
            return std::nullopt;
        case KappaProperty::K4:
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                if (bl[i][1] == bl[i + 1][1]) {
                    return fail("K4", {{"block_index", i},
                                       {"pair", block_str(bl[i]) + " " + block_str(bl[i + 1])}});
                }
            }
            return std::nullopt;
        case KappaProperty::K5: {
            // Three consecutive terms straddling a block boundary, keyed by the
            // split position, must determine both blocks.
            std::map<std::tuple<std::size_t, Block3>, std::pair<Block3, Block3>> seen;
            for (std::size_t j = 0; j + 3 <= ctx.projected.size(); ++j) {
                const std::size_t split = j % 3;  // 0 = aligned, inside one block
                if (split == 0) continue;
                const Block3 window{ctx.projected[j], ctx.projected[j + 1], ctx.projected[j + 2]};
                const auto value = std::make_pair(bl[j / 3], bl[j / 3 + 1]);
                auto [it, inserted] = seen.emplace(std::make_tuple(split, window), value);
                if (!inserted && it->second != value) {
                    return fail("K5", {{"window", block_str(window)}, {"split", split}});
                }
            }
            return std::nullopt;
        }
        case KappaProperty::K6:
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                if (bl[i][0] == bl[i + 1][2]) {
                    return fail("K6", {{"block_index", i},
                                       {"pair", block_str(bl[i]) + " " + block_str(bl[i + 1])}});
                }
            }
            return std::nullopt;
        case KappaProperty::K7:
            for (const Block3& a : ctx.occurring) {
                for (const Block3& b : ctx.occurring) {
                    if (a < b && (a[0] == b[0] || a[2] == b[2]) && !ctx.adjacent(a, b)) {
                        return fail("K7", {{"pair", block_str(a) + " " + block_str(b)}});
                    }
                }
            }
            return std::nullopt;
        case KappaProperty::K8:
            for (const auto& [a, b] : ctx.adjacency) {
                for (const Block3& c : ctx.occurring) {
                    if (c != a && c != b && ctx.adjacent(a, c) && ctx.adjacent(b, c)) {
                        return fail("K8", {{"pair", block_str(a) + " " + block_str(b)},
                                           {"common_neighbor", block_str(c)}});
                    }
                }
            }
            return std::nullopt;
        case KappaProperty::K9:
            for (std::size_t i = 0; i < 6; ++i) {
                const AuxSymbol a = aux_from_index(i);
                const std::uint8_t middle = ctx.table[i][1].letter;
                const std::uint8_t expected = std::uint8_t(a.letter % 3 + 1);
                if (middle != expected) {
                    return fail("K9", {{"symbol", aux_str(a)}, {"middle", int(middle)},
                                       {"expected", int(expected)}});
                }
            }
            return std::nullopt;
        case KappaProperty::K10: {
            std::map<std::tuple<bool, Symbol, Symbol>, std::pair<Block3, Block3>> seen;
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                const auto value = std::make_pair(bl[i], bl[i + 1]);
                for (bool last : {false, true}) {
                    const Symbol x1 = last ? bl[i][2] : bl[i][0];
                    const Symbol x2 = last ? bl[i + 1][2] : bl[i + 1][0];
                    if (x1 == x2) continue;
                    auto [it, inserted] = seen.emplace(std::make_tuple(last, x1, x2), value);
                    if (!inserted && it->second != value) {
                        return fail("K10", {{"terms", std::string{char('1' + x1), char('1' + x2)}},
                                            {"position", last ? "last" : "first"}});
                    }
                }
            }
            return std::nullopt;
        }
        case KappaProperty::K11: {
            std::map<std::tuple<Block3, std::size_t, Symbol>, Block3> seen;
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                for (const auto& [from, to] : {std::make_pair(bl[i], bl[i + 1]),
                                               std::make_pair(bl[i + 1], bl[i])}) {
                    if (from == to) continue;
                    for (std::size_t idx = 0; idx < 3; ++idx) {
                        auto [it, inserted] = seen.emplace(std::make_tuple(from, idx, to[idx]), to);
                        if (!inserted && it->second != to) {
                            return fail("K11", {{"block", block_str(from)}, {"index", idx + 1},
                                                {"term", char('1' + to[idx])}});
                        }
                    }
                }
            }
            return std::nullopt;
        }
        case KappaProperty::K12:
            for (std::size_t i = 0; i < nb; ++i) {
                for (std::size_t j = i + 1; j < nb; ++j) {
                    if (bl[i] != bl[j] && ctx.adjacent(bl[i], bl[j]) && (j - i - 1) % 2 != 0) {
                        return fail("K12", {{"block_indices", {i, j}},
                                            {"pair", block_str(bl[i]) + " " + block_str(bl[j])}});
                    }
                }
            }
            return std::nullopt;
    }
    return std::nullopt;
}

// ---------------- lambda properties ----------------

struct LambdaContext {
    const LambdaTable& table;
    std::size_t t;
    Word word;       // lambda^t
    Word prev;       // lambda^{t-1}; prev[i] is the preimage of block i
    std::vector<Block4> blocks;
    std::set<Block4> occurring;

    explicit LambdaContext(const LambdaTable& tab, std::size_t t_) : table(tab), t(t_) {
        word = lambda_iterate_with(table, t);
        prev = lambda_iterate_with(table, t ? t - 1 : 0);
        blocks = aligned_blocks<4>(word);
        for (const Block4& b : blocks) occurring.insert(b);
    }
};

std::optional<nlohmann::json> check_lambda(const LambdaContext& ctx, LambdaProperty p) {
    const auto& bl = ctx.blocks;
    const std::size_t nb = bl.size();
    auto pair_is = [](Symbol a, Symbol b, Symbol x, Symbol y) {
        return (a == x && b == y) || (a == y && b == x);
    };
    switch (p) {
        case LambdaProperty::L1:
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                if (!blocks_concat_square_free(bl[i], bl[i + 1])) {
                    return fail("L1", {{"block_index", i},
                                       {"pair", block_str(bl[i]) + " " + block_str(bl[i + 1])}});
                }
            }
            return std::nullopt;
        case LambdaProperty::L2: {
            std::size_t expected = 1;
            for (std::size_t i = 0; i < ctx.t; ++i) expected *= 4;
            if (ctx.word.size() != expected) {
                return fail("L2", {{"length", ctx.word.size()}, {"expected", expected}});
            }
            for (std::size_t i = 0; i < nb; ++i) {
                const Word& im = ctx.table[ctx.prev[i]];
                for (std::size_t j = 0; j < 4; ++j) {
                    if (bl[i][j] != im[j]) {
                        return fail("L2", {{"block_index", i}, {"block", block_str(bl[i])}});
                    }
                }
            }
            return std::nullopt;
        }
        case LambdaProperty::L3:
            for (std::size_t i = 0; i < nb; ++i) {
                if (!pair_is(bl[i][0], bl[i][1], 0, 1) || !pair_is(bl[i][2], bl[i][3], 2, 3)) {
                    return fail("L3", {{"block_index", i}, {"block", block_str(bl[i])}});
                }
            }
            return std::nullopt;
        case LambdaProperty::L4:
            for (std::size_t i = 0; i + 2 < nb; ++i) {
                if (bl[i] == bl[i + 2]) {
                    return fail("L4", {{"block_index", i}, {"block", block_str(bl[i])}});
                }
            }
            return std::nullopt;
        case LambdaProperty::L5:
            for (std::size_t i = 0; i + 1 < nb; ++i) {
                const Symbol p1 = ctx.prev[i], p2 = ctx.prev[i + 1];
                if (bl[i][0] == bl[i + 1][0] && bl[i][1] == bl[i + 1][1] &&
                    !pair_is(p1, p2, 0, 2) && !pair_is(p1, p2, 1, 3)) {
                    return fail("L5", {{"block_index", i}, {"kind", "first-two"}});
                }
                if (bl[i][2] == bl[i + 1][2] && bl[i][3] == bl[i + 1][3] &&
                    !pair_is(p1, p2, 0, 3) && !pair_is(p1, p2, 1, 2)) {
                    return fail("L5", {{"block_index", i}, {"kind", "last-two"}});
                }
            }
            return std::nullopt;
        case LambdaProperty::L6: {
            // Consecutive block-type triples occurring in lambda^t.
            std::set<std::array<Block4, 3>> triples;
            for (std::size_t i = 0; i + 2 < nb; ++i) {
                triples.insert({bl[i], bl[i + 1], bl[i + 2]});
            }
            for (const auto& t1 : triples) {
                for (const auto& t2 : triples) {
                    if (t1[0] == t2[0] || t1[2] != t2[2]) continue;
                    const Block4 &g1 = t1[0], &g2 = t2[0];
                    const bool same12 = g1[0] == g2[0] && g1[1] == g2[1];
                    const bool same34 = g1[2] == g2[2] && g1[3] == g2[3];
                    if (same12 || same34) {
                        return fail("L6", {{"triple1", block_str(t1[0]) + " " + block_str(t1[1]) +
                                                           " " + block_str(t1[2])},
                                           {"triple2", block_str(t2[0]) + " " + block_str(t2[1]) +
                                                           " " + block_str(t2[2])}});
                    }
                }
            }
            return std::nullopt;
        }
        case LambdaProperty::L7:
            for (std::size_t i = 0; i < nb; ++i) {
                for (std::size_t j = i + 1; j < nb; ++j) {
                    bool share = false;
                    for (std::size_t l = 0; l < 4; ++l) share = share || bl[i][l] == bl[j][l];
                    if ((j - i) % 4 == 0) {
                        if (share && bl[i] != bl[j]) {
                            return fail("L7", {{"block_indices", {i, j}}, {"kind", "multiple-of-4"}});
                        }
                    } else if ((j - i) % 2 == 0) {
                        if (bl[i] == bl[j]) {
                            return fail("L7", {{"block_indices", {i, j}}, {"kind", "even-not-4"}});
                        }
                    }
                }
            }
            return std::nullopt;
        case LambdaProperty::L8: {
            std::map<Block4, Symbol> preimage;
            for (Symbol s = 0; s < 4; ++s) {
                Block4 im{};
                for (std::size_t j = 0; j < 4; ++j) im[j] = ctx.table[s][j];
                if (!preimage.emplace(im, s).second) {
                    return fail("L8", {{"reason", "table images not distinct"}});
                }
            }
            for (std::size_t idx = 0; idx < 4; ++idx) {
                for (Symbol sym = 0; sym < 4; ++sym) {
                    std::set<Symbol> pre;
                    std::size_t candidates = 0;
                    for (const Block4& b : ctx.occurring) {
                        if (b[idx] == sym) { ++candidates; pre.insert(preimage.at(b)); }
                    }
                    if (candidates > 2) {
                        return fail("L8", {{"index", idx + 1}, {"term", int(sym) + 1},
                                           {"candidates", candidates}});
                    }
                    if (pre.size() == 2) {
                        const std::set<Symbol> s13{0, 2}, s24{1, 3}, s14{0, 3}, s23{1, 2};
                        const bool ok = idx < 2 ? (pre == s13 || pre == s24)
                                                : (pre == s14 || pre == s23);
                        if (!ok) {
                            return fail("L8", {{"index", idx + 1}, {"term", int(sym) + 1},
                                               {"reason", "preimage pair mismatch"}});
                        }
                    }
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<KappaProperty> all_kappa_properties() {
    std::vector<KappaProperty> out;
    for (int i = 0; i < 12; ++i) out.push_back(KappaProperty(i));
    return out;
}

std::vector<LambdaProperty> all_lambda_properties() {
    std::vector<LambdaProperty> out;
    for (int i = 0; i < 8; ++i) out.push_back(LambdaProperty(i));
    return out;
}

const char* property_name(KappaProperty p) { return kKappaNames[int(p)]; }
const char* property_name(LambdaProperty p) { return kLambdaNames[int(p)]; }

std::optional<KappaProperty> parse_kappa_property(std::string_view name) {
    for (int i = 0; i < 12; ++i) {
        if (name == kKappaNames[i]) return KappaProperty(i);
    }
    return std::nullopt;
}

std::optional<LambdaProperty> parse_lambda_property(std::string_view name) {
    for (int i = 0; i < 8; ++i) {
        if (name == kLambdaNames[i]) return LambdaProperty(i);
    }
    return std::nullopt;
}

Certificate verify_kappa_properties_with(const KappaTable& table, std::size_t t,
                                         const std::vector<KappaProperty>& props) {
    if (t < 2) throw std::invalid_argument("verify_kappa_properties: t must be >= 2");
    detail::Timer timer;
    KappaContext ctx(table, t);

    Certificate cert;
    cert.task = "kappa-properties";
    nlohmann::json names = nlohmann::json::array();
    for (KappaProperty p : props) names.push_back(property_name(p));
    cert.parameters = {{"t", t}, {"properties", names}};
    cert.counts = {{"length", ctx.projected.size()}, {"blocks", ctx.blocks.size()}};

    for (KappaProperty p : props) {
        if (auto witness = check_kappa(ctx, p)) {
            cert.status = Certificate::Status::counterexample;
            cert.witness = *witness;
            cert.elapsed_seconds = timer.seconds();
            return cert;
        }
    }
    cert.status = Certificate::Status::verified;
    cert.elapsed_seconds = timer.seconds();
    return cert;
}

Certificate verify_kappa_properties(std::size_t t, const std::vector<KappaProperty>& props) {
    return verify_kappa_properties_with(builtin_kappa_table(), t, props);
}

Certificate verify_lambda_properties_with(const LambdaTable& table, std::size_t t,
                                          const std::vector<LambdaProperty>& props) {
    if (t < 2) throw std::invalid_argument("verify_lambda_properties: t must be >= 2");
    detail::Timer timer;
    LambdaContext ctx(table, t);

    Certificate cert;
    cert.task = "lambda-properties";
    nlohmann::json names = nlohmann::json::array();
    for (LambdaProperty p : props) names.push_back(property_name(p));
    cert.parameters = {{"t", t}, {"properties", names}};
    cert.counts = {{"length", ctx.word.size()}, {"blocks", ctx.blocks.size()}};

    for (LambdaProperty p : props) {
        if (auto witness = check_lambda(ctx, p)) {
            cert.status = Certificate::Status::counterexample;
            cert.witness = *witness;
            cert.elapsed_seconds = timer.seconds();
            return cert;
        }
    }
    cert.status = Certificate::Status::verified;
    cert.elapsed_seconds = timer.seconds();
    return cert;
}

Certificate verify_lambda_properties(std::size_t t, const std::vector<LambdaProperty>& props) {
    return verify_lambda_properties_with(builtin_lambda_table(), t, props);
}

}  // namespace kthue
