#include "cwseq/weighting.hpp"

#include <string>

#include "cwseq/errors.hpp"

namespace cwseq {

WeightingIndex index_to_sp(long long z, long long k, int q) {
    if (k < 1) throw DomainError("weighting length k must be positive");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (z < 0 || z >= k * q)
        throw DomainError("weighting index " + std::to_string(z) + " outside [0, " +
                          std::to_string(k * q - 1) + "]");
    WeightingIndex idx;
    idx.z = z;
    idx.s = static_cast<int>(z / k);
    idx.p = static_cast<int>(z % k);
    idx.k = k;
    idx.q = q;
    return idx;
}

Sequence weighting_sequence(const WeightingIndex& idx) {
    if (idx.k < 1) throw DomainError("weighting length k must be positive");
    if (idx.s < 0 || idx.s > idx.q - 1)
        throw DomainError("weighting base symbol s=" + std::to_string(idx.s) + " outside [0, " +
                          std::to_string(idx.q - 1) + "]");
    if (idx.p < 0 || idx.p > idx.k - 1)
        throw DomainError("weighting step position p=" + std::to_string(idx.p) + " outside [0, " +
                          std::to_string(idx.k - 1) + "]");
    std::vector<int> b(static_cast<std::size_t>(idx.k), idx.s);
    const int bumped = (idx.s + 1) % idx.q;
    for (int i = 0; i < idx.p; ++i) b[static_cast<std::size_t>(i)] = bumped;
    return Sequence(std::move(b), idx.q);
}

std::vector<WeightedOutput> all_weighted_outputs(const Sequence& x) {
    if (x.empty()) throw DomainError("all_weighted_outputs: empty information word");
    const long long k = static_cast<long long>(x.size());
    const int q = x.q();
    std::vector<WeightedOutput> rows;
    rows.reserve(static_cast<std::size_t>(k * q));
    for (long long z = 0; z < k * q; ++z) {
        WeightedOutput row;
        row.z = z;
        row.y = add_mod(x, weighting_sequence(index_to_sp(z, k, q)));
        row.weight = weight(row.y);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cwseq
