#include "kthue/repetition.hpp"

#include <numeric>

namespace kthue {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Fraction: denominator must be positive");
    if (n < 0) throw std::invalid_argument("Fraction: negative values unsupported");
    const long long g = std::gcd(n, d);
    if (g > 1) { num /= g; den /= g; }
}

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Fraction(std::stoll(std::string(text)), 1);
    }
    return Fraction(std::stoll(std::string(text.substr(0, slash))),
                    std::stoll(std::string(text.substr(slash + 1))));
}

std::string Fraction::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::optional<SquareWitness> find_square(const Word& w) {
    const Symbol* x = w.symbols().data();
    const std::size_t n = w.size();
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t max_t = (n - s) / 2;
        for (std::size_t t = 1; t <= max_t; ++t) {
            bool equal = true;
            for (std::size_t i = 0; i < t; ++i) {
                if (x[s + i] != x[s + t + i]) { equal = false; break; }
            }
            if (equal) return SquareWitness{s + 1, t};
        }
    }
    return std::nullopt;
}

std::optional<RepetitionWitness> is_k_thue(const Word& w, std::size_t k) {
    if (k == 0) throw std::invalid_argument("is_k_thue: k must be positive");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= k; ++d) {
        // Minimal (start, half_length) for this d, merged across the d residue
        // classes so `start` is the original-word position.
        std::optional<RepetitionWitness> best;
        for (std::size_t r = 1; r <= d && r <= n; ++r) {
            const Word sub = d_subsequence(w, d, r);
            if (auto sq = find_square(sub)) {
                const std::size_t start = r + (sq->start - 1) * d;
                if (!best || start < best->start ||
                    (start == best->start && sq->half_length < best->half_length)) {
                    best = RepetitionWitness{d, start, sq->half_length};
                }
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

ExponentWitness max_exponent(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::invalid_argument("max_exponent: empty word");
    const Symbol* x = w.symbols().data();
    ExponentWitness best{1, 1, 1};  // exponent 1: pi = first symbol, eps empty
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < n; ++j) {
            if (x[j] == x[j + p]) {
                ++run;
                // factor w[j-run+1 .. j+p] (0-based start j-run+1) has period p
                const std::size_t total = run + p;
                if (total * best.pi_length > best.total_length * p) {
                    best = ExponentWitness{j + 2 - run, p, total};
                }
            } else {
                run = 0;
            }
        }
    }
    return best;
}

std::optional<ExponentWitness> is_q_plus_free(const Word& w, const Fraction& q) {
    if (q < Fraction(1, 1)) throw std::invalid_argument("is_q_plus_free: q must be >= 1");
    if (w.empty()) return std::nullopt;
    ExponentWitness m = max_exponent(w);
    if (m.exponent() > q) return m;
    return std::nullopt;
}

bool has_square_ending_at(const std::vector<Symbol>& w, std::size_t pos) {
    if (pos < 2 || pos > w.size()) return false;
    for (std::size_t t = 1; 2 * t <= pos; ++t) {
        bool equal = true;
        for (std::size_t i = t; i-- > 0;) {
            if (w[pos - 2 * t + i] != w[pos - t + i]) { equal = false; break; }
        }
        if (equal) return true;
    }
    return false;
}

bool has_k_repetition_ending_at(const std::vector<Symbol>& w, std::size_t k, std::size_t pos) {
    if (pos > w.size()) return false;
    for (std::size_t d = 1; d <= k; ++d) {
        for (std::size_t t = 1; pos > (2 * t - 1) * d; ++t) {
            const std::size_t p = pos - (2 * t - 1) * d;  // 1-based first term
            bool equal = true;
            for (std::size_t i = t; i-- > 0;) {
                if (w[p - 1 + i * d] != w[p - 1 + (t + i) * d]) { equal = false; break; }
            }
            if (equal) return true;
        }
    }
    return false;
}

bool exceeds_exponent_at_end(const std::vector<Symbol>& w, const Fraction& q) {
    const std::size_t m = w.size();
    for (std::size_t p = 1; p < m; ++p) {
        // longest period-p run ending at the last position
        std::size_t s = 0;
        std::size_t j = m - p;
        while (j >= 1 && w[j - 1] == w[j - 1 + p]) { ++s; --j; }
        // factor length s+p with period p: exponent (s+p)/p > q ?
        if (static_cast<long long>(s + p) * q.den > q.num * static_cast<long long>(p)) return true;
    }
    return false;
}

}  // namespace kthue
