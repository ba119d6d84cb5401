#include "cwseq/oracle.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cwseq/errors.hpp"
#include "cwseq/graycode.hpp"
#include "cwseq/weighting.hpp"

namespace cwseq::oracle {

BigInt cw_cardinality(long long n, long long W, int q) {
    if (n < 0) throw DomainError("negative length " + std::to_string(n));
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    const long long max_weight = n * (q - 1);
    if (W < 0 || W > max_weight) return 0;

    // Complement symmetry halves the table: #(n, W) == #(n, n(q-1)-W).
    const long long target = std::min(W, max_weight - W);

    // dp[w] = number of length-i words with sum w; the q-wide symbol window
    // collapses to a prefix-sum difference.
    std::vector<BigInt> dp(static_cast<std::size_t>(target) + 1);
    dp[0] = 1;
    std::vector<BigInt> prefix(dp.size() + 1);
    for (long long i = 1; i <= n; ++i) {
        prefix[0] = 0;
        for (std::size_t w = 0; w < dp.size(); ++w) prefix[w + 1] = prefix[w] + dp[w];
        for (long long w = target; w >= 0; --w) {
            const long long lo = std::max<long long>(0, w - (q - 1));
            dp[static_cast<std::size_t>(w)] =
                prefix[static_cast<std::size_t>(w) + 1] - prefix[static_cast<std::size_t>(lo)];
        }
    }
    return dp[static_cast<std::size_t>(target)];
}

CardinalityReport cardinality_report(long long n, long long W, int q, long long k) {
    if (k < 0) throw DomainError("negative information length");
    CardinalityReport report;
    report.n = n;
    report.W = W;
    report.q = q;
    report.k = k;
    report.n1 = cw_cardinality(n, W, q);
    report.n2 = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
    report.feasible = report.n1 >= report.n2;
    return report;
}

int min_redundancy_floor(long long k, int q, WeightPolicy policy) {
    if (k < 1) throw DomainError("information length must be positive");
    if (policy != WeightPolicy::nearest_balanced) throw DomainError("unknown weight policy");
    const BigInt inputs = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
    for (int r = 1;; ++r) {
        const long long n = k + r;
        const long long W = balancing_value(n, q).round_half_up();
        if (cw_cardinality(n, W, q) >= inputs) return r;
    }
}

bool RangeReport::guaranteed_contains(long long W) const {
    return std::binary_search(guaranteed.begin(), guaranteed.end(), W);
}

namespace {

void check_cap(const CodecParams& params, const SweepOptions& opts) {
    const BigInt rows = boost::multiprecision::pow(BigInt(params.q),
                                                   static_cast<unsigned>(params.k)) *
                        params.k * params.q;
    if (rows > opts.max_candidates)
        throw ResourceCapExceeded("sweep needs " + rows.str() + " candidate evaluations, cap is " +
                                  std::to_string(opts.max_candidates));
}

long long input_count(const CodecParams& params) {
    long long total = 1;  // q^k; the cap check already proved this fits
    for (long long i = 0; i < params.k; ++i) total *= params.q;
    return total;
}

// Shared per-z data, x-independent: hoisted out of the q^k loop.
struct ZTableRow {
    Sequence b;
    long long gray_weight = 0;
};

std::vector<ZTableRow> build_ztable(const CodecParams& params) {
    std::vector<ZTableRow> table;
    table.reserve(static_cast<std::size_t>(params.k * params.q));
    for (long long z = 0; z < params.k * params.q; ++z) {
        ZTableRow row;
        row.b = weighting_sequence(index_to_sp(z, params.k, params.q));
        row.gray_weight = weight(gray_encode(index_to_word(z, params.gray_len, params.q)));
        table.push_back(std::move(row));
    }
    return table;
}

// Marks every W reachable for x: union over z of [w(c'), w(c') + e(q-1)].
void achievable_mask(const Sequence& x, const std::vector<ZTableRow>& ztable, long long window,
                     std::vector<std::uint8_t>& mask) {
    std::fill(mask.begin(), mask.end(), 0);
    for (const ZTableRow& row : ztable) {
        const long long partial = row.gray_weight + weight(add_mod(x, row.b));
        for (long long w = partial; w <= partial + window; ++w)
            mask[static_cast<std::size_t>(w)] = 1;
    }
}

struct RangeAccumulator {
    std::vector<std::uint8_t> inter;  // weights reachable for every input seen
    std::vector<std::uint8_t> uni;    // weights reachable for some input

    explicit RangeAccumulator(std::size_t size) : inter(size, 1), uni(size, 0) {}

    void absorb_mask(const std::vector<std::uint8_t>& mask) {
        for (std::size_t w = 0; w < mask.size(); ++w) {
            inter[w] &= mask[w];
            uni[w] |= mask[w];
        }
    }

    void merge(const RangeAccumulator& other) {
        for (std::size_t w = 0; w < inter.size(); ++w) {
            inter[w] &= other.inter[w];
            uni[w] |= other.uni[w];
        }
    }
};

void range_sweep_serial(const CodecParams& params, const std::vector<ZTableRow>& ztable,
                        long long window, RangeAccumulator& acc) {
    const long long total = input_count(params);
    std::vector<std::uint8_t> mask(acc.inter.size());
    for (long long xi = 0; xi < total; ++xi) {
        const Sequence x = index_to_word(xi, static_cast<int>(params.k), params.q);
        achievable_mask(x, ztable, window, mask);
        acc.absorb_mask(mask);
    }
}

void range_sweep_parallel(const CodecParams& params, const std::vector<ZTableRow>& ztable,
                          long long window, RangeAccumulator& acc) {
#ifdef _OPENMP
    const long long total = input_count(params);
#pragma omp parallel
    {
        RangeAccumulator local(acc.inter.size());
        std::vector<std::uint8_t> mask(acc.inter.size());
        long long seen = 0;
#pragma omp for schedule(static) nowait
        for (long long xi = 0; xi < total; ++xi) {
            const Sequence x = index_to_word(xi, static_cast<int>(params.k), params.q);
            achievable_mask(x, ztable, window, mask);
            local.absorb_mask(mask);
            ++seen;
        }
#pragma omp critical
        {
            if (seen > 0) acc.merge(local);
        }
    }
#else
    range_sweep_serial(params, ztable, window, acc);
#endif
}

}  // namespace

RangeReport guaranteed_weight_range(int q, long long k, int e, const SweepOptions& opts) {
    const CodecParams params = derive_params(q, k, e);
    check_cap(params, opts);

    RangeReport report;
    report.params = params;
    report.basic = weight_bounds(params, BoundFormula::basic);
    report.extended = weight_bounds(params, BoundFormula::extended);
    report.tight = weight_bounds(params, BoundFormula::tight);

    const std::vector<ZTableRow> ztable = build_ztable(params);
    const long long window = static_cast<long long>(e) * (q - 1);
    RangeAccumulator acc(static_cast<std::size_t>(params.max_weight()) + 1);
    if (opts.exec == Exec::parallel)
        range_sweep_parallel(params, ztable, window, acc);
    else
        range_sweep_serial(params, ztable, window, acc);

    for (std::size_t w = 0; w < acc.inter.size(); ++w) {
        if (acc.inter[w]) report.guaranteed.push_back(static_cast<long long>(w));
        if (acc.uni[w]) report.achievable_union.push_back(static_cast<long long>(w));
    }
    return report;
}

namespace {

void check_one_roundtrip(long long xi, const CodecParams& params, long long W,
                         std::vector<RoundTripViolation>& out) {
    const Sequence x = index_to_word(xi, static_cast<int>(params.k), params.q);
    EncodeResult enc;
    try {
        enc = encode(x, params);
    } catch (const WeightUnreachable&) {
        out.push_back({xi, "encode failed: weight " + std::to_string(W) + " unreachable for x=" +
                               x.str()});
        return;
    }
    if (weight(enc.codeword) != W)
        out.push_back({xi, "codeword " + enc.codeword.str() + " has weight " +
                               std::to_string(weight(enc.codeword)) + ", expected " +
                               std::to_string(W)});
    const Sequence back = decode(enc.codeword, params);
    if (back != x)
        out.push_back({xi, "decode(" + enc.codeword.str() + ") = " + back.str() + ", expected " +
                               x.str()});
}

}  // namespace

RoundTripReport exhaustive_roundtrip(int q, long long k, int e, long long W,
                                     const SweepOptions& opts) {
    const CodecParams params = derive_params(q, k, e, W);
    check_cap(params, opts);

    RoundTripReport report;
    report.params = params;
    const long long total = input_count(params);
    report.inputs_checked = total;

    if (opts.exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<RoundTripViolation> local;
#pragma omp for schedule(static) nowait
            for (long long xi = 0; xi < total; ++xi) check_one_roundtrip(xi, params, W, local);
#pragma omp critical
            report.violations.insert(report.violations.end(), local.begin(), local.end());
        }
        std::sort(report.violations.begin(), report.violations.end(),
                  [](const RoundTripViolation& a, const RoundTripViolation& b) {
                      return a.input_index < b.input_index;
                  });
#else
        for (long long xi = 0; xi < total; ++xi)
            check_one_roundtrip(xi, params, W, report.violations);
#endif
    } else {
        for (long long xi = 0; xi < total; ++xi)
            check_one_roundtrip(xi, params, W, report.violations);
    }
    return report;
}

}  // namespace cwseq::oracle
