#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "pwpi/poset.hpp"

using namespace pwpi;

namespace {

// Random posets from cover pairs (i, j) with i < j; acyclic by construction.
Poset random_poset(oracle::Rng& rng, int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.below(3) == 0) covers.emplace_back(i, j);
    return Poset::from_cover_relations(n, covers);
}

std::vector<std::vector<int>> all_ideals(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> ideals;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1))) subset.push_back(i);
        if (p.is_ideal(subset)) ideals.push_back(subset);
    }
    return ideals;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("closure of a path gives a chain") {
    const auto p = Poset::from_cover_relations(3, {{1, 2}, {2, 3}});
    CHECK(p.leq(1, 3));  // transitivity
    CHECK(p.leq(1, 1));
    CHECK(!p.leq(3, 1));
    CHECK(p == Poset::chain(3));
}

TEST_CASE("no covers gives an antichain") {
    const auto p = Poset::from_cover_relations(3, {});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(p.leq(i, j) == (i == j));
}

TEST_CASE("cycles and bad indices are rejected") {
    CHECK_THROWS_AS(Poset::from_cover_relations(2, {{1, 2}, {2, 1}}), Error);
    CHECK_THROWS_AS(Poset::from_cover_relations(3, {{1, 2}, {2, 3}, {3, 1}}), Error);
    CHECK_THROWS_AS(Poset::from_cover_relations(2, {{1, 3}}), Error);
    CHECK_THROWS_AS(Poset::from_cover_relations(2, {{0, 1}}), Error);
}

TEST_CASE("ideals of chains and antichains") {
    const auto chain = Poset::chain(3);
    CHECK(chain.ideal_of({3}) == std::vector<int>{1, 2, 3});
    CHECK(chain.ideal_of({}) == std::vector<int>{});
    CHECK(chain.strict_down_set(3) == std::vector<int>{1, 2});
    CHECK(chain.principal_ideal(1) == std::vector<int>{1});

    const auto anti = Poset::antichain(3);
    CHECK(anti.ideal_of({2}) == std::vector<int>{2});
    CHECK_THROWS_AS(anti.ideal_of({4}), Error);
}

TEST_CASE("maximal elements") {
    const auto chain = Poset::chain(3);
    CHECK(chain.maximal_elements({1, 2, 3}) == std::vector<int>{3});
    CHECK(chain.maximal_elements({}) == std::vector<int>{});
    const auto anti = Poset::antichain(3);
    CHECK(anti.maximal_elements({1, 3}) == std::vector<int>{1, 3});
}

TEST_CASE("prime ideal detection") {
    const auto chain = Poset::chain(3);
    CHECK(chain.is_prime_ideal({1, 2}));
    CHECK_THROWS_AS(chain.is_prime_ideal({1, 3}), Error);  // not down-closed
    const auto anti = Poset::antichain(3);
    CHECK(!anti.is_prime_ideal({1, 2}));
    CHECK(!anti.is_prime_ideal({}));  // no maximal element at all
}

TEST_CASE("ideal_of is idempotent and monotone on random posets") {
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + rng.below(5);
        const auto p = random_poset(rng, n);
        for (int mask1 = 0; mask1 < (1 << n); ++mask1) {
            std::vector<int> j1;
            for (int i = 1; i <= n; ++i)
                if (mask1 & (1 << (i - 1))) j1.push_back(i);
            const auto ideal = p.ideal_of(j1);
            CHECK(p.ideal_of(ideal) == ideal);
            CHECK(p.is_ideal(ideal));
            // monotone: add one generator, the ideal can only grow
            for (int extra = 1; extra <= n; ++extra) {
                auto j2 = j1;
                j2.push_back(extra);
                CHECK(subset_of(ideal, p.ideal_of(j2)));
            }
        }
    }
}

TEST_CASE("nested ideals drop maximal elements monotonically") {
    // For ideals I within J: I minus Max(I) stays within J minus Max(J).
    oracle::Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + rng.below(5);
        const auto p = random_poset(rng, n);
        const auto ideals = all_ideals(p);
        for (const auto& inner : ideals) {
            CHECK(p.maximal_elements(inner).empty() == inner.empty());
            for (const auto& outer : ideals) {
                if (!subset_of(inner, outer)) continue;
                const auto lhs = set_minus(inner, p.maximal_elements(inner));
                const auto rhs = set_minus(outer, p.maximal_elements(outer));
                CHECK(subset_of(lhs, rhs));
            }
        }
    }
}

TEST_CASE("chains are rigid, antichains have the symmetric group") {
    const auto chain_auts = enumerate_automorphisms(Poset::chain(3));
    REQUIRE(chain_auts.size() == 1);
    CHECK(chain_auts[0].is_identity());

    const auto anti_auts = enumerate_automorphisms(Poset::antichain(3));
    CHECK(anti_auts.size() == 6);
    // lexicographic order of permutation words
    CHECK(anti_auts.front().images() == std::vector<int>{1, 2, 3});
    CHECK(anti_auts.back().images() == std::vector<int>{3, 2, 1});
}

TEST_CASE("labels restrict the automorphism group") {
    const auto anti = Poset::antichain(3);
    const LabelMap labels({1, 2, 1});
    const auto auts = enumerate_automorphisms(anti, &labels);
    REQUIRE(auts.size() == 2);
    CHECK(auts[0].images() == std::vector<int>{1, 2, 3});
    CHECK(auts[1].images() == std::vector<int>{3, 2, 1});
}

TEST_CASE("automorphism lists are closed under composition and inverse") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + rng.below(5);
        const auto p = random_poset(rng, n);
        const auto auts = enumerate_automorphisms(p);
        auto member = [&auts](const PosetAutomorphism& candidate) {
            return std::find(auts.begin(), auts.end(), candidate) != auts.end();
        };
        for (const auto& a : auts) {
            CHECK(member(a.inverse()));
            for (const auto& b : auts) CHECK(member(a.after(b)));
        }
    }
}

TEST_CASE("antichain automorphism count is the product of label factorials") {
    auto factorial = [](int v) {
        std::uint64_t f = 1;
        for (int i = 2; i <= v; ++i) f *= i;
        return f;
    };
    struct Config {
        std::vector<int> labels;
        std::vector<int> multiplicities;
    };
    for (const auto& config : {Config{{1, 1, 1}, {3}}, Config{{1, 2, 1}, {2, 1}}, Config{{3, 1, 3, 1, 3}, {3, 2}},
                               Config{{2, 2, 5}, {2, 1}}}) {
        const auto anti = Poset::antichain(static_cast<int>(config.labels.size()));
        const LabelMap labels(config.labels);
        std::uint64_t expected = 1;
        for (int r : config.multiplicities) expected *= factorial(r);
        CHECK(enumerate_automorphisms(anti, &labels).size() == expected);
    }
}

TEST_CASE("automorphism guard rejects oversized posets") {
    CHECK_THROWS_AS(enumerate_automorphisms(Poset::antichain(13)), Error);
    CHECK_NOTHROW(enumerate_automorphisms(Poset::chain(13), nullptr, 13));
}

TEST_CASE("invalid permutation words are rejected") {
    const auto chain = Poset::chain(2);
    CHECK_THROWS_AS(PosetAutomorphism(chain, {2, 1}), Error);     // reverses the order
    CHECK_THROWS_AS(PosetAutomorphism(chain, {1, 1}), Error);     // not a bijection
    CHECK_THROWS_AS(PosetAutomorphism(chain, {1}), Error);        // wrong length
    CHECK_THROWS_AS(PosetAutomorphism(chain, {1, 3}), Error);     // out of range
    const auto anti = Poset::antichain(2);
    const LabelMap labels({1, 2});
    CHECK_THROWS_AS(PosetAutomorphism(anti, {2, 1}, &labels), Error);  // label clash
    CHECK_NOTHROW(PosetAutomorphism(anti, {2, 1}));
}

TEST_CASE("cover relations canonicalize redundant input") {
    const auto p = Poset::from_cover_relations(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(p.cover_relations() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    const auto rebuilt = Poset::from_cover_relations(3, p.cover_relations());
    CHECK(rebuilt == p);
}

TEST_CASE("label maps validate and total") {
    const LabelMap labels({1, 2, 1});
    CHECK(labels.size() == 3);
    CHECK(labels.total() == 4);
    CHECK(labels.label(2) == 2);
    CHECK_THROWS_AS(LabelMap({1, 0}), Error);
    CHECK_THROWS_AS(labels.label(4), Error);
}
