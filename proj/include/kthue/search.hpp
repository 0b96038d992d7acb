#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "kthue/morphism.hpp"

namespace kthue {

/// Configuration of the exhaustive search for uniform ternary-domain morphisms
/// whose images yield k-Thue words.
struct SearchConfig {
    int k = 2;
    std::size_t width = 7;
    std::size_t alphabet_size = 0;  // 0 means k+2
    /// Optional fixed leading symbols per image. Constraints must be
    /// compatible with canonical (first-appearance) symbol ordering.
    std::array<std::vector<Symbol>, 3> prefixes;
    /// Bounded-image test length during search; final candidates should be
    /// re-verified at 40.
    std::size_t test_length = 20;
    std::uint64_t node_budget = 0;  // 0 = unlimited; checked at task boundaries
    std::size_t partition_depth = 8;
    std::size_t jobs = 1;
    std::string resume_token;  // from a previous budget-exhausted run
};

struct SearchResult {
    std::vector<Morphism> morphisms;
    std::uint64_t nodes = 0;
    std::map<std::string, std::uint64_t> pruning;  // rejection counts by filter stage
    std::optional<std::string> checkpoint;         // set iff the budget ran out
    bool exhausted = false;  // the whole constrained space was covered
};

/// Depth-first enumeration of image triples, symbol by symbol, in canonical
/// (first-appearance) symbol order. Partial assignments are pruned by
/// incremental k-Thue checks on the images and on concatenations arising from
/// short square-free ternary words; complete triples must pass the bounded
/// -image DFS up to cfg.test_length and the window-determinism check.
/// The sink receives surviving morphisms in deterministic order.
SearchResult search_morphisms(const SearchConfig& cfg,
                              const std::function<void(const Morphism&)>& sink = {});

/// Relabels codomain symbols by first appearance in the concatenated images;
/// idempotent. Two morphisms in the same codomain-permutation orbit map to the
/// same canonical representative.
Morphism canonicalize(const Morphism& m);

/// The search's final filters: bounded images at length L, then window
/// determinism. Used to re-verify emitted candidates (at L = 40) and to test
/// externally supplied morphisms.
bool passes_filters(const Morphism& m, int k, std::size_t L);

}  // namespace kthue
