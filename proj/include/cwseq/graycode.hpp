#ifndef CWSEQ_GRAYCODE_HPP
#define CWSEQ_GRAYCODE_HPP

#include "cwseq/sequence.hpp"

namespace cwseq {

// (r',q)-Gray code: a reordering of all length-r' q-ary words in which
// consecutive words (by lexicographic index) differ in exactly one symbol
// position, with weight difference +-1. The running-sum parity of the
// already-produced Gray symbols decides whether the next symbol is kept
// or complemented.

/// Lexicographic word -> Gray word. Bijective on length-r' q-ary words.
Sequence gray_encode(const Sequence& d);

/// Gray word -> lexicographic word; exact inverse of gray_encode.
Sequence gray_decode(const Sequence& g);

/// Length-len base-q representation of z, most significant symbol first.
/// Throws DomainError unless 0 <= z < q^len.
Sequence index_to_word(long long z, int len, int q);

/// Integer value of a base-q word (MSB first); inverse of index_to_word.
long long word_to_index(const Sequence& d);

}  // namespace cwseq

#endif  // CWSEQ_GRAYCODE_HPP
