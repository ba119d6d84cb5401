#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cwseq/errors.hpp"
#include "cwseq/weighting.hpp"
#include "test_util.hpp"

using namespace cwseq;

namespace {

WeightingIndex sp(int s, int p, long long k, int q) {
    WeightingIndex idx;
    idx.z = s * k + p;
    idx.s = s;
    idx.p = p;
    idx.k = k;
    idx.q = q;
    return idx;
}

}  // namespace

TEST_CASE("weighting sequences: first p symbols bumped, rest at s") {
    CHECK(weighting_sequence(sp(0, 2, 4, 3)) == Sequence::parse("1100", 3));
    CHECK(weighting_sequence(sp(0, 0, 4, 3)) == Sequence::parse("0000", 3));
    CHECK(weighting_sequence(sp(3, 2, 4, 4)) == Sequence::parse("0033", 4));
    // s = q-1 wraps the bumped prefix to zero
    CHECK(weighting_sequence(sp(2, 1, 4, 3)) == Sequence::parse("0222", 3));
}

TEST_CASE("index_to_sp splits z = s*k + p") {
    const WeightingIndex idx = index_to_sp(14, 4, 4);
    CHECK(idx.s == 3);
    CHECK(idx.p == 2);

    CHECK(index_to_sp(0, 4, 3).s == 0);
    CHECK(index_to_sp(0, 4, 3).p == 0);

    const WeightingIndex last = index_to_sp(4 * 3 - 1, 4, 3);
    CHECK(last.s == 3 - 1);
    CHECK(last.p == 4 - 1);
}

TEST_CASE("out-of-range indices are rejected") {
    CHECK_THROWS_AS(index_to_sp(12, 4, 3), DomainError);
    CHECK_THROWS_AS(index_to_sp(-1, 4, 3), DomainError);
    CHECK_THROWS_AS(weighting_sequence(sp(3, 0, 4, 3)), DomainError);
    CHECK_THROWS_AS(weighting_sequence(sp(0, 4, 4, 3)), DomainError);
}

TEST_CASE("all 12 weighted outputs of 2102") {
    const auto rows = all_weighted_outputs(Sequence::parse("2102", 3));
    REQUIRE(rows.size() == 12);
    const char* expected_y[] = {"2102", "0102", "0202", "0212", "0210", "1210",
                                "1010", "1020", "1021", "2021", "2121", "2101"};
    const long long expected_w[] = {5, 3, 4, 5, 3, 4, 2, 3, 4, 5, 6, 4};
    for (std::size_t z = 0; z < 12; ++z) {
        CAPTURE(z);
        CHECK(rows[z].z == static_cast<long long>(z));
        CHECK(rows[z].y == Sequence::parse(expected_y[z], 3));
        CHECK(rows[z].weight == expected_w[z]);
    }
}

TEST_CASE("row z=0 leaves the input untouched") {
    const Sequence x = Sequence::zeros(5, 3);
    const auto rows = all_weighted_outputs(x);
    CHECK(rows[0].y == x);
    CHECK(rows[0].weight == 0);
}

TEST_CASE("row z=1 of 102") {
    const auto rows = all_weighted_outputs(Sequence::parse("102", 3));
    CHECK(rows[1].y == Sequence::parse("202", 3));
}

TEST_CASE("b(0) is all-zero and z -> b(z) is injective") {
    for (int q = 2; q <= 4; ++q) {
        for (long long k = 1; k <= 6; ++k) {
            std::set<std::vector<int>> seen;
            for (long long z = 0; z < k * q; ++z)
                seen.insert(weighting_sequence(index_to_sp(z, k, q)).symbols());
            CHECK(static_cast<long long>(seen.size()) == k * q);
            CHECK(weighting_sequence(index_to_sp(0, k, q)) ==
                  Sequence::zeros(static_cast<std::size_t>(k), q));
        }
    }
}

TEST_CASE("weight path steps are +1 or -(q-1), exhaustive q <= 4, k <= 7") {
    // The acceptance suite pushes the same sweep to k <= 9.
    for (int q = 2; q <= 4; ++q) {
        for (int k = 1; k <= 7; ++k) {
            for (const Sequence& x : test::all_words(k, q)) {
                const auto rows = all_weighted_outputs(x);
                for (std::size_t z = 1; z < rows.size(); ++z) {
                    const long long step = rows[z].weight - rows[z - 1].weight;
                    if (step != 1 && step != -(q - 1)) {
                        CAPTURE(q);
                        CAPTURE(k);
                        CAPTURE(x.str());
                        CAPTURE(z);
                        REQUIRE(false);
                    }
                }
            }
        }
    }
}

TEST_CASE("the weight path straddles the balancing value") {
    for (int q = 2; q <= 4; ++q) {
        for (int k = 1; k <= 5; ++k) {
            const HalfInteger beta = balancing_value(k, q);
            if (!beta.is_integral()) continue;
            for (const Sequence& x : test::all_words(k, q)) {
                long long lo = k * q, hi = -1;
                for (const auto& row : all_weighted_outputs(x)) {
                    lo = std::min(lo, row.weight);
                    hi = std::max(hi, row.weight);
                }
                CHECK(lo <= beta.numerator());
                CHECK(hi >= beta.numerator());
            }
        }
    }
}

TEST_CASE("some output lands within (q-1) of the balancing value when k = q^t") {
    const std::pair<int, int> cases[] = {{2, 2}, {2, 4}, {2, 8}, {3, 3}, {4, 4}};
    for (const auto& [q, k] : cases) {
        // (k-2)(q-1)/2 and (k+2)(q-1)/2; both integral since k = q^t
        const long long lo = (k - 2) * (q - 1) / 2;
        const long long hi = (k + 2) * (q - 1) / 2;
        for (const Sequence& x : test::all_words(k, q)) {
            bool found = false;
            for (const auto& row : all_weighted_outputs(x))
                if (row.weight >= lo && row.weight <= hi) {
                    found = true;
                    break;
                }
            CAPTURE(q);
            CAPTURE(x.str());
            CHECK(found);
        }
    }
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(all_weighted_outputs(Sequence()), DomainError);
}
