#include "kthue/constructions.hpp"

namespace kthue {

Word k_thue_word(int k, std::size_t n) {
    const Morphism& mu = builtin_mu(k);
    const std::size_t width = *mu.uniform_width();
    if (n == 0) return Word({}, std::size_t(k) + 2);
    const std::size_t pre = (n + width - 1) / width;
    const Word image = mu.apply(dejean_word(pre));
    return image.factor(1, n);
}

namespace {

Word extend_alphabet(const Word& w, std::size_t alphabet) {
    return Word(w.symbols(), alphabet);
}

}  // namespace

Word phi4(std::size_t t, std::size_t cap) {
    if (t == 0) throw std::invalid_argument("phi4: t must be >= 1");
    const Word base = extend_alphabet(project(kappa_iterate(t, cap / 2)), 6);
    // wrap cycle 4 5 6 (displayed), internally 3 4 5
    const Word cycle({3, 4, 5}, 6);
    return wreath(base, circular_prefix(cycle, base.size()), 3);
}

Word phi6(std::size_t t, std::size_t cap) {
    if (t == 0) throw std::invalid_argument("phi6: t must be >= 1");
    const Word base = extend_alphabet(lambda_iterate(t, cap / 2), 8);
    // wrap cycle 5 6 7 8 (displayed), internally 4..7
    const Word cycle({4, 5, 6, 7}, 8);
    return wreath(base, circular_prefix(cycle, base.size()), 4);
}

}  // namespace kthue
