#include "kthue/builtin.hpp"

#include <map>
#include <mutex>

#include "kthue/repetition.hpp"

namespace kthue {

namespace {

struct MuEntry {
    int k;
    std::array<const char*, 3> images;
};

// Published tables, one digit string per domain symbol 0, 1, 2.
constexpr MuEntry kMuTables[] = {
    {2, {"0310213", "0230132", "0120321"}},
    {3, {"10231402310243", "01243024130243", "01240312401234"}},
    {4, {"012350412534", "012345103245", "012340521345"}},
    {5, {"012345601235460235146023546", "012345601234650134625013465", "012345061234065123460152346"}},
    {6, {"01234560172436501243756", "01234560127354061235476", "01234560123746510324657"}},
    {7, {"012345670812345608721345687201345678", "012345670182345601872345618702345687",
         "012345670128345670281345762801345768"}},
    {8, {"012345678902315647890312645789", "012345678902143675982014365789",
         "012345678019324568079123548679"}},
};

constexpr std::size_t kMuWidths[] = {7, 14, 12, 27, 23, 36, 30};  // k = 2..8

std::vector<Morphism> build_mu_tables() {
    std::vector<Morphism> out;
    for (const MuEntry& e : kMuTables) {
        std::vector<Word> images;
        for (const char* img : e.images) {
            images.push_back(parse_word(img, 0, std::size_t(e.k) + 2));
        }
        Morphism m(std::move(images));
        // Self-check against the published widths and alphabet sizes; a failure
        // here means the embedded literals were corrupted.
        if (!m.uniform_width() || *m.uniform_width() != kMuWidths[e.k - 2]) {
            throw std::logic_error("builtin_mu: width self-check failed for k=" + std::to_string(e.k));
        }
        if (m.codomain_alphabet_size() != std::size_t(e.k) + 2) {
            throw std::logic_error("builtin_mu: alphabet self-check failed for k=" + std::to_string(e.k));
        }
        bool full_alphabet = true;
        std::vector<bool> seen(m.codomain_alphabet_size(), false);
        for (const Word& im : m.images())
            for (Symbol s : im.symbols()) seen[s] = true;
        for (bool b : seen) full_alphabet = full_alphabet && b;
        if (!full_alphabet) {
            throw std::logic_error("builtin_mu: unused codomain symbol for k=" + std::to_string(e.k));
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

const Morphism& builtin_mu(int k) {
    if (k < 2 || k > 8) throw std::invalid_argument("builtin_mu: k must be in 2..8");
    static const std::vector<Morphism> tables = build_mu_tables();
    return tables[std::size_t(k) - 2];
}

std::size_t mu_width(int k) {
    if (k < 2 || k > 8) throw std::invalid_argument("mu_width: k must be in 2..8");
    return kMuWidths[k - 2];
}

std::size_t aux_index(AuxSymbol a) {
    return std::size_t(a.letter - 1) + (a.mark == Mark::under ? 3 : 0);
}

AuxSymbol aux_from_index(std::size_t i) {
    if (i >= 6) throw std::invalid_argument("aux_from_index: index out of range");
    return AuxSymbol{std::uint8_t(i % 3 + 1), i < 3 ? Mark::over : Mark::under};
}

namespace {

constexpr AuxSymbol O1{1, Mark::over}, O2{2, Mark::over}, O3{3, Mark::over};
constexpr AuxSymbol U1{1, Mark::under}, U2{2, Mark::under}, U3{3, Mark::under};

// kappa(over a) and kappa(under a), indexed by aux_index.
const KappaTable kKappa = {{
    {O1, U2, O3},  // kappa(1 over)
    {O2, U3, O1},  // kappa(2 over)
    {O3, U1, O2},  // kappa(3 over)
    {U3, O2, U1},  // kappa(1 under)
    {U1, O3, U2},  // kappa(2 under)
    {U2, O1, U3},  // kappa(3 under)
}};

}  // namespace

const KappaTable& builtin_kappa_table() { return kKappa; }

std::array<AuxSymbol, 3> kappa(AuxSymbol a) { return kKappa[aux_index(a)]; }

AuxWord kappa_iterate_with(const KappaTable& table, std::size_t t, std::size_t cap) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < t; ++i) {
        if (len > cap / 3) throw ResourceLimitError("kappa_iterate: 3^t exceeds cap");
        len *= 3;
    }
    AuxWord w{O1};
    for (std::size_t i = 0; i < t; ++i) {
        AuxWord next;
        next.reserve(w.size() * 3);
        for (AuxSymbol a : w) {
            const auto& im = table[aux_index(a)];
            next.insert(next.end(), im.begin(), im.end());
        }
        w = std::move(next);
    }
    return w;
}

AuxWord kappa_iterate(std::size_t t, std::size_t cap) {
    return kappa_iterate_with(kKappa, t, cap);
}

Word project(const AuxWord& aw) {
    std::vector<Symbol> out;
    out.reserve(aw.size());
    for (AuxSymbol a : aw) out.push_back(Symbol(a.letter - 1));
    return Word(std::move(out), 3);
}

const LambdaTable& builtin_lambda_table() {
    // 1-based display images 1234, 2143, 1243, 2134.
    static const LambdaTable table = {
        parse_word("1234", 1, 4),
        parse_word("2143", 1, 4),
        parse_word("1243", 1, 4),
        parse_word("2134", 1, 4),
    };
    return table;
}

const Morphism& builtin_lambda() {
    static const Morphism m{[] {
        const LambdaTable& t = builtin_lambda_table();
        return std::vector<Word>(t.begin(), t.end());
    }()};
    return m;
}

Word lambda_iterate_with(const LambdaTable& table, std::size_t t, std::size_t cap) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < t; ++i) {
        if (len > cap / 4) throw ResourceLimitError("lambda_iterate: 4^t exceeds cap");
        len *= 4;
    }
    Word w({0}, 4);
    Morphism m{std::vector<Word>(table.begin(), table.end())};
    for (std::size_t i = 0; i < t; ++i) w = m.apply(w);
    return w;
}

Word lambda_iterate(std::size_t t, std::size_t cap) {
    return lambda_iterate_with(builtin_lambda_table(), t, cap);
}

}  // namespace kthue
