#include "cwseq/graycode.hpp"

#include <string>

#include "cwseq/errors.hpp"

namespace cwseq {

Sequence gray_encode(const Sequence& d) {
    const int q = d.q();
    std::vector<int> g(d.size());
    long long running = 0;  // sum of Gray symbols produced so far
    for (std::size_t i = 0; i < d.size(); ++i) {
        g[i] = (running % 2 == 0) ? d[i] : q - 1 - d[i];
        running += g[i];
    }
    return Sequence(std::move(g), q);
}

Sequence gray_decode(const Sequence& g) {
    const int q = g.q();
    std::vector<int> d(g.size());
    long long running = 0;  // the parity is taken over g, which is at hand
    for (std::size_t i = 0; i < g.size(); ++i) {
        d[i] = (running % 2 == 0) ? g[i] : q - 1 - g[i];
        running += g[i];
    }
    return Sequence(std::move(d), q);
}

Sequence index_to_word(long long z, int len, int q) {
    if (len < 0) throw DomainError("negative word length");
    if (z < 0) throw DomainError("negative index " + std::to_string(z));
    std::vector<int> word(static_cast<std::size_t>(len));
    long long rest = z;
    for (int i = len - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
        rest /= q;
    }
    if (rest != 0)
        throw DomainError("index " + std::to_string(z) + " does not fit in " +
                          std::to_string(len) + " base-" + std::to_string(q) + " symbols");
    return Sequence(std::move(word), q);
}

long long word_to_index(const Sequence& d) {
    long long value = 0;
    for (std::size_t i = 0; i < d.size(); ++i) value = value * d.q() + d[i];
    return value;
}

}  // namespace cwseq
