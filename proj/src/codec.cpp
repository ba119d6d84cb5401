#include "cwseq/codec.hpp"

#include <string>
#include <utility>

#include "cwseq/errors.hpp"
#include "cwseq/graycode.hpp"
#include "cwseq/weighting.hpp"

namespace cwseq {

CodecParams derive_params(int q, long long k, int e) {
    if (q < 2) throw DomainError("alphabet size must be at least 2, got " + std::to_string(q));
    if (k < 1) throw DomainError("information length must be positive, got " + std::to_string(k));
    if (e < 1)
        throw DomainError("redundant vector length must be at least 1, got " + std::to_string(e));

    int t = 0;
    long long power = 1;
    while (power < k) {
        power *= q;
        ++t;
    }
    if (power != k || t < 1)
        throw UnsupportedLength("k=" + std::to_string(k) + " is not q^t for q=" +
                                std::to_string(q) + " with positive t");

    CodecParams params;
    params.q = q;
    params.t = t;
    params.k = k;
    params.gray_len = t + 1;  // q^{r'} = kq
    params.redundant_len = e;
    params.total_len = k + params.gray_len + e;
    params.redundancy = params.gray_len + e;
    params.target_weight.reset();
    return params;
}

CodecParams derive_params(int q, long long k, int e, long long W) {
    CodecParams params = derive_params(q, k, e);
    params.target_weight = W;
    return params;
}

const char* bound_formula_name(BoundFormula f) {
    switch (f) {
        case BoundFormula::basic: return "basic";
        case BoundFormula::extended: return "extended";
        case BoundFormula::tight: return "tight";
        case BoundFormula::oracle: return "oracle";
    }
    return "?";
}

WeightBounds weight_bounds(const CodecParams& params, BoundFormula formula) {
    const long long qm1 = params.q - 1;
    const long long rp = params.gray_len;
    const long long e = params.redundant_len;

    // (k-2)(q-1) is even whenever k = q^t: odd q makes q-1 even, even q
    // makes k even.
    WeightBounds bounds;
    bounds.formula = formula;
    bounds.lower = (params.k - 2) * qm1 / 2;
    switch (formula) {
        case BoundFormula::basic:
            bounds.upper = HalfInteger::from_halves((params.k + 2 * rp + 4) * qm1);
            break;
        case BoundFormula::extended:
            bounds.upper = HalfInteger::from_halves((params.k + 2 * rp + 2 * e + 2) * qm1);
            break;
        case BoundFormula::tight:
            bounds.upper = HalfInteger::from_halves((params.k + 2 * rp + 2 * e + 1) * qm1);
            break;
        case BoundFormula::oracle:
            throw DomainError("oracle bounds come from an exhaustive sweep, not a formula");
    }
    return bounds;
}

namespace {

void check_information_word(const Sequence& x, const CodecParams& params) {
    if (x.q() != params.q)
        throw DimensionError("information word alphabet q=" + std::to_string(x.q()) +
                             " does not match parameters q=" + std::to_string(params.q));
    if (static_cast<long long>(x.size()) != params.k)
        throw DimensionError("information word length " + std::to_string(x.size()) +
                             " does not match k=" + std::to_string(params.k));
}

long long require_target_weight(const CodecParams& params) {
    if (!params.target_weight) throw DomainError("parameters carry no target weight");
    return *params.target_weight;
}

/// Canonical weight-w vector of length e: greedy left-fill with q-1.
Sequence canonical_redundant_vector(long long w, int e, int q) {
    std::vector<int> u(static_cast<std::size_t>(e), 0);
    for (int i = 0; i < e && w > 0; ++i) {
        const int take = static_cast<int>(std::min<long long>(q - 1, w));
        u[static_cast<std::size_t>(i)] = take;
        w -= take;
    }
    return Sequence(std::move(u), q);
}

}  // namespace

EncodeResult encode(const Sequence& x, const CodecParams& params) {
    check_information_word(x, params);
    const long long W = require_target_weight(params);
    const long long window = static_cast<long long>(params.redundant_len) * (params.q - 1);

    for (long long z = 0; z < params.k * params.q; ++z) {
        const Sequence y = add_mod(x, weighting_sequence(index_to_sp(z, params.k, params.q)));
        const Sequence g = gray_encode(index_to_word(z, params.gray_len, params.q));
        const long long partial = weight(g) + weight(y);
        const long long needed = W - partial;
        if (needed < 0 || needed > window) continue;
        const Sequence u = canonical_redundant_vector(needed, params.redundant_len, params.q);
        return EncodeResult{concat(u, concat(g, y)), z};
    }
    throw WeightUnreachable("weight " + std::to_string(W) + " is unreachable for this input (q=" +
                            std::to_string(params.q) + ", k=" + std::to_string(params.k) +
                            ", e=" + std::to_string(params.redundant_len) + ")");
}

EncodingTrace enumerate_encodings(const Sequence& x, const CodecParams& params) {
    check_information_word(x, params);
    const long long W = require_target_weight(params);
    const long long window = static_cast<long long>(params.redundant_len) * (params.q - 1);

    EncodingTrace trace;
    trace.rows.reserve(static_cast<std::size_t>(params.k * params.q));
    for (long long z = 0; z < params.k * params.q; ++z) {
        TraceRow row;
        row.z = z;
        row.b = weighting_sequence(index_to_sp(z, params.k, params.q));
        row.y = add_mod(x, row.b);
        row.g = gray_encode(index_to_word(z, params.gray_len, params.q));
        const long long needed = W - weight(row.g) - weight(row.y);
        row.u = (needed >= 0 && needed <= window)
                    ? canonical_redundant_vector(needed, params.redundant_len, params.q)
                    : Sequence::zeros(static_cast<std::size_t>(params.redundant_len), params.q);
        row.c = concat(row.u, concat(row.g, row.y));
        row.codeword_weight = weight(row.c);
        row.hit = row.codeword_weight == W;
        if (row.hit && !trace.chosen_z) trace.chosen_z = z;
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

DecodeSteps decode_steps(const Sequence& c, const CodecParams& params) {
    if (c.q() != params.q)
        throw DimensionError("codeword alphabet q=" + std::to_string(c.q()) +
                             " does not match parameters q=" + std::to_string(params.q));
    if (static_cast<long long>(c.size()) != params.total_len)
        throw DimensionError("codeword length " + std::to_string(c.size()) +
                             " does not match n=" + std::to_string(params.total_len));

    DecodeSteps steps;
    steps.u = c.slice(0, static_cast<std::size_t>(params.redundant_len));
    steps.g = c.slice(static_cast<std::size_t>(params.redundant_len),
                      static_cast<std::size_t>(params.gray_len));
    steps.y = c.slice(static_cast<std::size_t>(params.redundant_len + params.gray_len),
                      static_cast<std::size_t>(params.k));
    steps.d = gray_decode(steps.g);
    steps.z = word_to_index(steps.d);
    if (steps.z >= params.k * params.q)
        throw InvalidPrefix("prefix decodes to z=" + std::to_string(steps.z) +
                            ", beyond the weighting range [0, " +
                            std::to_string(params.k * params.q - 1) + "]");
    const WeightingIndex idx = index_to_sp(steps.z, params.k, params.q);
    steps.s = idx.s;
    steps.p = idx.p;
    steps.b = weighting_sequence(idx);
    steps.x = sub_mod(steps.y, steps.b);
    return steps;
}

Sequence decode(const Sequence& c, const CodecParams& params) {
    return decode_steps(c, params).x;
}

}  // namespace cwseq
