#pragma once

#include "kthue/builtin.hpp"
#include "kthue/word.hpp"

namespace kthue {

/// Length-n prefix of mu_k applied to a (7/4)+-free ternary word. The result
/// is k-Thue over k+2 symbols; prefix truncation is safe because the k-Thue
/// property is closed under factors.
Word k_thue_word(int k, std::size_t n);

/// phi4^t: the projected hexagonal word kappa^t over {1,2,3} wreathed (order 3)
/// with the circular stream over {4,5,6}. 2 * 3^t terms over 6 symbols,
/// internally 0-based with display offset 1.
Word phi4(std::size_t t, std::size_t cap = kDefaultIterationCap);

/// phi6^t: lambda^t over {1,2,3,4} wreathed (order 4) with the circular stream
/// over {5,6,7,8}. 2 * 4^t terms over 8 symbols.
Word phi6(std::size_t t, std::size_t cap = kDefaultIterationCap);

}  // namespace kthue
