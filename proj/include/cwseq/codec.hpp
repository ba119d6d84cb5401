#ifndef CWSEQ_CODEC_HPP
#define CWSEQ_CODEC_HPP

#include <optional>
#include <vector>

#include "cwseq/sequence.hpp"

namespace cwseq {

// Constant-weight codec. A length-k information word x becomes the
// codeword c = [u|g|y] of length n = k + r' + e:
//
//   y = x (+) b(z)   payload, weight-adjusted by one of the kq weighting
//                    sequences,
//   g                Gray word of length r' = log_q(k) + 1 encoding z,
//   u                e redundant symbols topping the weight up to exactly W.
//
// Requires k = q^t so that the q^{r'} Gray words and the kq weighting
// sequences pair off one-to-one.

/// Complete parameter bundle with all derived lengths.
struct CodecParams {
    int q = 2;
    int t = 1;                 // k = q^t
    long long k = 2;           // information length
    int gray_len = 2;          // r' = t + 1
    int redundant_len = 1;     // e >= 1
    long long total_len = 5;   // n = k + r' + e
    int redundancy = 3;        // r = r' + e
    std::optional<long long> target_weight;  // W; unset for weight-agnostic use

    long long max_weight() const { return total_len * (q - 1); }
};

/// Validates q >= 2, e >= 1 and k = q^t (t >= 1); fills in the derived
/// lengths. Throws UnsupportedLength when k is not a power of q.
CodecParams derive_params(int q, long long k, int e);
CodecParams derive_params(int q, long long k, int e, long long W);

enum class BoundFormula {
    basic,     // [(k-2)(q-1)/2, (k+2r'+4)(q-1)/2], single redundant digit
    extended,  // upper (k+2r'+2e+2)(q-1)/2
    tight,     // upper (k+2r'+2e+1)(q-1)/2
    oracle,    // measured by exhaustive sweep, not by formula
};

const char* bound_formula_name(BoundFormula f);

/// An achievable-weight interval according to one bound formula. Upper
/// endpoints are half-integral for even q, hence exact rationals.
struct WeightBounds {
    long long lower = 0;
    HalfInteger upper;
    BoundFormula formula = BoundFormula::tight;
};

WeightBounds weight_bounds(const CodecParams& params, BoundFormula formula);

struct EncodeResult {
    Sequence codeword;
    long long z = 0;
};

/// Scans z = 0, 1, 2, ... and accepts the first index whose partial
/// codeword c' = [g|y] satisfies 0 <= W - w(c') <= e(q-1); u is then the
/// canonical weight-(W - w(c')) vector (greedy left-fill with q-1).
/// The result always has weight exactly W. Throws WeightUnreachable when
/// no index qualifies.
EncodeResult encode(const Sequence& x, const CodecParams& params);

struct TraceRow {
    long long z = 0;
    Sequence b, y, g, u, c;
    long long codeword_weight = 0;
    bool hit = false;  // codeword_weight == W
};

/// One row per z, ascending, mirroring the by-hand encoding tables. Rows
/// whose required top-up weight cannot fit in u carry the all-zero u.
struct EncodingTrace {
    std::vector<TraceRow> rows;
    std::optional<long long> chosen_z;  // smallest hit, if any
};

EncodingTrace enumerate_encodings(const Sequence& x, const CodecParams& params);

/// Splits c into [u|g|y], recovers z from the Gray prefix and returns
/// x = y (-) b(z). Never looks at u or at any weight. Throws DimensionError
/// on a length/alphabet mismatch and InvalidPrefix if the recovered z
/// falls outside [0, kq) (possible only with hand-built, inconsistent
/// parameters).
Sequence decode(const Sequence& c, const CodecParams& params);

/// decode, keeping every intermediate value for inspection.
struct DecodeSteps {
    Sequence u, g, d, y, b, x;
    long long z = 0;
    int s = 0;
    int p = 0;
};

DecodeSteps decode_steps(const Sequence& c, const CodecParams& params);

}  // namespace cwseq

#endif  // CWSEQ_CODEC_HPP
