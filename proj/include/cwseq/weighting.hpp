#ifndef CWSEQ_WEIGHTING_HPP
#define CWSEQ_WEIGHTING_HPP

#include <vector>

#include "cwseq/sequence.hpp"

namespace cwseq {

// The kq weighting sequences b(s,p) of length k: the first p symbols are
// (s+1) mod q, the rest are s. Adding b(z) modulo q to an information word
// walks its weight along a path whose steps are +1 or -(q-1), which is what
// makes every weight near the balancing value reachable.

/// Identifies one weighting sequence; z = s*k + p is the flat scan index.
struct WeightingIndex {
    long long z = 0;
    int s = 0;
    int p = 0;
    long long k = 0;
    int q = 2;
};

/// Splits z into (s, p) = (z / k, z mod k). Throws DomainError unless
/// 0 <= z < kq.
WeightingIndex index_to_sp(long long z, long long k, int q);

/// Builds b(s,p). Throws DomainError if (s, p) is out of range.
Sequence weighting_sequence(const WeightingIndex& idx);

struct WeightedOutput {
    long long z = 0;
    Sequence y;  // x (+) b(z)
    long long weight = 0;
};

/// All kq candidates y = x (+) b(z), in ascending z order. Every downstream
/// tie-break depends on this order.
std::vector<WeightedOutput> all_weighted_outputs(const Sequence& x);

}  // namespace cwseq

#endif  // CWSEQ_WEIGHTING_HPP
