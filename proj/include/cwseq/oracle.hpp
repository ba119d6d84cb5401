#ifndef CWSEQ_ORACLE_HPP
#define CWSEQ_ORACLE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cwseq/codec.hpp"
#include "cwseq/sequence.hpp"

namespace cwseq::oracle {

// Brute-force ground truth for the codec, independent of every bound
// formula: exhaustive sweeps over the whole q^k input space, and exact
// counting of constant-weight sequences. Everything here runs at desk
// scale; sweeps larger than the work cap are refused.

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of length-n sequences over [0, q-1] with symbol sum W.
/// Dynamic programming over bounded compositions; zero outside
/// [0, n(q-1)].
BigInt cw_cardinality(long long n, long long W, int q);

/// Cardinality of the weight-W code space versus the q^k input space.
/// Any constant-weight scheme needs n1 >= n2 to stand a chance.
struct CardinalityReport {
    long long n = 0;
    long long W = 0;
    int q = 2;
    long long k = 0;
    BigInt n1;  // # of (n, W, q) constant-weight sequences
    BigInt n2;  // q^k
    bool feasible = false;
};

CardinalityReport cardinality_report(long long n, long long W, int q, long long k);

/// Smallest redundancy r with cw_cardinality(k+r, W, q) >= q^k, where W
/// follows the given policy.
enum class WeightPolicy {
    nearest_balanced,  // W = round(beta_{n,q}), ties up
};

int min_redundancy_floor(long long k, int q, WeightPolicy policy = WeightPolicy::nearest_balanced);

enum class Exec { serial, parallel };

struct SweepOptions {
    long long max_candidates = 10'000'000;  // q^k * kq row evaluations
    Exec exec = Exec::parallel;
};

/// Achievable weights, measured: `guaranteed` holds every W encodable for
/// EVERY input (intersection over the q^k inputs), `achievable_union`
/// every W encodable for SOME input. The formula bounds ride along for
/// comparison; the sweep, not the formulas, is authoritative.
struct RangeReport {
    CodecParams params;
    std::vector<long long> guaranteed;
    std::vector<long long> achievable_union;
    WeightBounds basic, extended, tight;

    bool guaranteed_contains(long long W) const;
};

/// Throws ResourceCapExceeded when q^k * kq exceeds the cap, and
/// UnsupportedLength when k != q^t.
RangeReport guaranteed_weight_range(int q, long long k, int e, const SweepOptions& opts = {});

struct RoundTripViolation {
    long long input_index = 0;  // x = base-q digits of this index, MSB first
    std::string reason;
};

struct RoundTripReport {
    CodecParams params;
    long long inputs_checked = 0;
    std::vector<RoundTripViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Runs the real encoder and decoder over every input: encode must
/// succeed, hit weight W exactly, and decode back to the input.
/// Violations are report content, not errors.
RoundTripReport exhaustive_roundtrip(int q, long long k, int e, long long W,
                                     const SweepOptions& opts = {});

}  // namespace cwseq::oracle

#endif  // CWSEQ_ORACLE_HPP
