#pragma once

#include <array>
#include <cstdint>

#include "kthue/morphism.hpp"
#include "kthue/word.hpp"

namespace kthue {

/// Default cap on materialized sequence length for iterated morphisms.
inline constexpr std::size_t kDefaultIterationCap = 10'000'000;

/// Thrown when an iteration would exceed its configured symbol cap.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// The published uniform morphism mu_k : A3* -> A(k+2)*, 2 <= k <= 8.
/// Tables are embedded as literal data; the first call runs a self-check of
/// widths and alphabet sizes and throws std::logic_error on a transcription
/// error. Widths are (7, 14, 12, 27, 23, 36, 30) for k = 2..8.
const Morphism& builtin_mu(int k);

/// Expected image width of builtin_mu(k).
std::size_t mu_width(int k);

// --- hexagonal morphism kappa over the marked 6-letter alphabet ---

enum class Mark : std::uint8_t { over, under };

/// One of the six marked symbols 1..3 with an over/under mark.
struct AuxSymbol {
    std::uint8_t letter = 1;  // 1..3
    Mark mark = Mark::over;

    bool operator==(const AuxSymbol&) const = default;
};

using AuxWord = std::vector<AuxSymbol>;

/// Dense index 0..5 of an AuxSymbol: over 1,2,3 then under 1,2,3.
std::size_t aux_index(AuxSymbol a);
AuxSymbol aux_from_index(std::size_t i);

/// Image table of the hexagonal morphism, indexed by aux_index.
using KappaTable = std::array<std::array<AuxSymbol, 3>, 6>;

const KappaTable& builtin_kappa_table();

/// kappa(a) per the published table.
std::array<AuxSymbol, 3> kappa(AuxSymbol a);

/// kappa^t starting from the single symbol "over 1"; length 3^t.
AuxWord kappa_iterate(std::size_t t, std::size_t cap = kDefaultIterationCap);
AuxWord kappa_iterate_with(const KappaTable& table, std::size_t t,
                           std::size_t cap = kDefaultIterationCap);

/// Mark erasure pi: letter a (1..3) maps to symbol a-1 over alphabet {0,1,2}
/// (displayed 1-based as in the paper).
Word project(const AuxWord& aw);

// --- lambda morphism over {1,2,3,4} (internally 0..3) ---

using LambdaTable = std::array<Word, 4>;

const LambdaTable& builtin_lambda_table();
const Morphism& builtin_lambda();

/// lambda^t starting from the single symbol 1 (internal 0); length 4^t.
Word lambda_iterate(std::size_t t, std::size_t cap = kDefaultIterationCap);
Word lambda_iterate_with(const LambdaTable& table, std::size_t t,
                         std::size_t cap = kDefaultIterationCap);

/// Deterministic ternary (7/4)+-free word of length n: the prefix of a fixed
/// infinite stream grown greedily (least symbol first) where every appended
/// symbol is validated by an exact-rational exponent check and a bounded
/// lookahead extension probe. dejean_word(n) is a prefix of dejean_word(n+1)
/// by construction.
Word dejean_word(std::size_t n);

}  // namespace kthue
