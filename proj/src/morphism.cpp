#include "kthue/morphism.hpp"

#include <sstream>

namespace kthue {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Morphism: needs at least one image");
    codomain_alphabet_ = 0;
    for (const Word& im : images_) {
        codomain_alphabet_ = std::max(codomain_alphabet_, im.alphabet_size());
    }
    bool uniform = true;
    const std::size_t width = images_.front().size();
    for (const Word& im : images_) {
        if (im.size() != width) { uniform = false; break; }
    }
    if (uniform && width > 0) uniform_width_ = width;
}

const Word& Morphism::image(Symbol s) const {
    if (s >= images_.size()) throw std::invalid_argument("Morphism: symbol outside domain");
    return images_[s];
}

Word Morphism::apply(const Word& w) const {
    std::vector<Symbol> out;
    if (uniform_width_) out.reserve(w.size() * *uniform_width_);
    for (Symbol s : w.symbols()) {
        const Word& im = image(s);
        out.insert(out.end(), im.symbols().begin(), im.symbols().end());
    }
    return Word(std::move(out), codomain_alphabet_);
}

std::string to_morphism_file(const Morphism& m, int k) {
    if (m.codomain_alphabet_size() > 10) {
        throw std::invalid_argument("morphism file format supports alphabets up to 10");
    }
    if (!m.uniform_width()) {
        throw std::invalid_argument("morphism file format requires a uniform morphism");
    }
    std::ostringstream out;
    out << k << ' ' << *m.uniform_width() << ' ' << m.codomain_alphabet_size() << '\n';
    for (const Word& im : m.images()) out << format_word(im) << '\n';
    return out.str();
}

MorphismFile parse_morphism_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    int k = 0;
    std::size_t width = 0, alphabet = 0;
    if (!(in >> k >> width >> alphabet)) {
        throw std::invalid_argument("morphism file: malformed header");
    }
    std::string line;
    std::getline(in, line);  // rest of header line
    std::vector<Word> images;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Word im = parse_word(line, 0, alphabet);
        if (im.size() != width) throw std::invalid_argument("morphism file: image width mismatch");
        images.push_back(std::move(im));
    }
    if (images.empty()) throw std::invalid_argument("morphism file: no images");
    return MorphismFile{k, Morphism(std::move(images))};
}

}  // namespace kthue
