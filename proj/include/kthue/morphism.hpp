#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kthue/word.hpp"

namespace kthue {

/// A symbol -> word mapping. Domain symbols are 0 .. domain_size()-1; all
/// images share one codomain alphabet. If every image has the same length the
/// morphism is uniform and uniform_width() is set.
class Morphism {
public:
    explicit Morphism(std::vector<Word> images);

    std::size_t domain_size() const { return images_.size(); }
    std::size_t codomain_alphabet_size() const { return codomain_alphabet_; }
    std::optional<std::size_t> uniform_width() const { return uniform_width_; }

    const Word& image(Symbol s) const;
    const std::vector<Word>& images() const { return images_; }

    /// Concatenation of images in order; a monoid homomorphism.
    Word apply(const Word& w) const;

    bool operator==(const Morphism& other) const { return images_ == other.images_; }

private:
    std::vector<Word> images_;
    std::size_t codomain_alphabet_ = 0;
    std::optional<std::size_t> uniform_width_;
};

inline Word apply(const Morphism& m, const Word& w) { return m.apply(w); }

/// Morphism file format: header line "k width alphabet_size", then one image
/// per domain symbol as a digit string. Round-trips bit-exactly.
struct MorphismFile {
    int k = 0;
    Morphism morphism;
};

std::string to_morphism_file(const Morphism& m, int k);
MorphismFile parse_morphism_file(std::string_view text);

}  // namespace kthue
