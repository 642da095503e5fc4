#include "oracles.hpp"

#include "shv/poset.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace shv;

namespace {

using Params = std::tuple<int, int, int>;

std::vector<Params> small_params() {
    std::vector<Params> out;
    for (int k = 1; k <= 3; ++k)
        for (int n = k; n <= 6; ++n)
            for (int r = 0; r <= k; ++r)
                if (2 * k <= r + n) out.emplace_back(k, n, r);
    return out;
}

}  // namespace

class PosetAxioms : public ::testing::TestWithParam<Params> {};

TEST_P(PosetAxioms, OrderIsReflexiveAntisymmetricTransitive) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    auto elems = p.elements();
    for (const auto& a : elems) {
        EXPECT_TRUE(p.leq(a, a));
        for (const auto& b : elems) {
            if (a != b && p.leq(a, b)) EXPECT_FALSE(p.leq(b, a));
            for (const auto& c : elems)
                if (p.leq(a, b) && p.leq(b, c)) EXPECT_TRUE(p.leq(a, c));
        }
    }
}

TEST_P(PosetAxioms, CompareAgreesWithLeq) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    auto elems = p.elements();
    std::size_t incomparable = 0;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            Relation rel = p.compare(a, b);
            if (a == b)
                EXPECT_EQ(rel, Relation::Equal);
            else if (p.leq(a, b))
                EXPECT_EQ(rel, Relation::Less);
            else if (p.leq(b, a))
                EXPECT_EQ(rel, Relation::Greater);
            else {
                EXPECT_EQ(rel, Relation::Incomparable);
                ++incomparable;
            }
        }
    EXPECT_EQ(incomparable, 2 * p.incomparable_pairs().total());
}

TEST_P(PosetAxioms, AngleOrderIsComponentwise) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    for (const auto& a : subsets(n, k))
        for (const auto& b : subsets(n, k)) {
            bool componentwise = true;
            for (int i = 0; i < k; ++i) componentwise = componentwise && a[i] <= b[i];
            EXPECT_EQ(p.leq(angle(a), angle(b)), componentwise);
            EXPECT_EQ(p.leq(square(b), square(a)), componentwise);
        }
}

TEST_P(PosetAxioms, IncomparableCountsMatchFormulas) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    auto inc = p.incomparable_pairs();
    BigInt N = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    BigInt same = N * (N + 1) / 2 - oracle::ssyt_two_columns(k, n);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(inc.angle_angle.size())), same);
    EXPECT_EQ(inc.square_square.size(), inc.angle_angle.size());
    BigInt c = k - r - 1 >= 0 ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - r - 1)) : BigInt(0);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(inc.mixed.size())), c * c);
}

TEST_P(PosetAxioms, LinearExtensionRespectsOrder) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    auto ext = p.linear_extension();
    ASSERT_EQ(ext.size(), p.elements().size());
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = i + 1; j < ext.size(); ++j) EXPECT_FALSE(p.leq(ext[j], ext[i]) && ext[i] != ext[j]);
}

TEST_P(PosetAxioms, ChainCountsMatchPathEnumeration) {
    auto [k, n, r] = GetParam();
    GluedPoset p(k, n, r);
    for (const auto& s : subsets(n, k)) EXPECT_EQ(p.chain_count(angle(s)), oracle::young_chains(s, n));
}

INSTANTIATE_TEST_SUITE_P(Small, PosetAxioms, ::testing::ValuesIn(small_params()));

TEST(Poset, CoveringRelationCounts) {
    EXPECT_EQ(GluedPoset(2, 6, 0).covering_relations().size(), 6u);
    EXPECT_EQ(GluedPoset(3, 7, 1).covering_relations().size(), 6u);
    auto top = GluedPoset(3, 5, 3).covering_relations();
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(top[0].square, square({1, 2, 3}));
    EXPECT_EQ(top[0].angle, angle({1, 2, 3}));
}

TEST(Poset, CoversGlueTheTwoCopies) {
    GluedPoset p(2, 6, 0);
    for (const auto& c : p.covering_relations()) {
        EXPECT_EQ(p.compare(c.square, c.angle), Relation::Less);
        for (const auto& e : p.elements())
            if (e != c.square && e != c.angle) EXPECT_FALSE(p.leq(c.square, e) && p.leq(e, c.angle));
    }
}

TEST(Poset, IncomparablePairCountsFromExamples) {
    auto count = [](int k, int n, int r) {
        auto inc = GluedPoset(k, n, r).incomparable_pairs();
        return std::make_tuple(inc.angle_angle.size(), inc.square_square.size(), inc.mixed.size());
    };
    EXPECT_EQ(count(2, 5, 0), std::make_tuple(5u, 5u, 25u));
    EXPECT_EQ(count(2, 6, 0), std::make_tuple(15u, 15u, 36u));
    EXPECT_EQ(count(3, 7, 1), std::make_tuple(140u, 140u, 49u));
}

TEST(Poset, ChainCountsInY26) {
    GluedPoset p(2, 6, 0);
    EXPECT_EQ(p.chain_count(angle({5, 6})), 1);
    EXPECT_EQ(p.chain_count(angle({1, 2})), 14);
    EXPECT_EQ(p.chain_count(angle({3, 4})), 2);
}

TEST(Poset, HookContentCounts) {
    EXPECT_EQ(hook_content_count(2, 4), 1);
    EXPECT_EQ(hook_content_count(2, 5), 5);
    EXPECT_EQ(hook_content_count(2, 6), 15);
    EXPECT_EQ(hook_content_count(3, 7), 140);
    for (int k = 1; k <= 4; ++k)
        for (int n = k; n <= 9; ++n) {
            BigInt N = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
            EXPECT_EQ(hook_content_count(k, n), N * (N + 1) / 2 - oracle::ssyt_two_columns(k, n)) << k << "," << n;
        }
}

TEST(Poset, BidegreeOf250) {
    auto b = GluedPoset(2, 5, 0).bidegree();
    std::map<std::pair<unsigned, unsigned>, BigInt> want{
        {{3, 7}, 5}, {{4, 6}, 10}, {{5, 5}, 12}, {{6, 4}, 10}, {{7, 3}, 5}};
    EXPECT_EQ(b.terms, want);
    EXPECT_EQ(b.coefficient_sum(), 42);
}

TEST(Poset, BidegreeOf260And371) {
    auto b = GluedPoset(2, 6, 0).bidegree();
    std::vector<BigInt> coeffs;
    for (const auto& [e, c] : b.terms) coeffs.push_back(c);
    EXPECT_EQ(coeffs, (std::vector<BigInt>{28, 70, 90, 70, 28}));
    EXPECT_EQ(GluedPoset(2, 6, 0).count_maximal_chains(), 286);

    auto big = GluedPoset(3, 7, 1).bidegree();
    coeffs.clear();
    for (const auto& [e, c] : big.terms) {
        EXPECT_EQ(e.first + e.second, 48u);
        EXPECT_GE(std::min(e.first, e.second), 22u);
        coeffs.push_back(c);
    }
    EXPECT_EQ(coeffs, (std::vector<BigInt>{25872, 77616, 105840, 77616, 25872}));
    EXPECT_EQ(GluedPoset(3, 7, 1).count_maximal_chains(), 312816);
}

TEST(Poset, BidegreeSumEqualsChainTotal) {
    for (auto [k, n, r] : small_params()) {
        GluedPoset p(k, n, r);
        EXPECT_EQ(p.bidegree().coefficient_sum(), p.count_maximal_chains()) << k << n << r;
    }
}

TEST(Poset, MeetJoinOfMixedPairsIsComparable) {
    for (auto [k, n, r] : std::vector<Params>{{2, 5, 0}, {3, 6, 1}, {3, 7, 1}}) {
        GluedPoset p(k, n, r);
        for (const auto& [a, s] : p.incomparable_pairs().mixed) {
            auto [m, j] = p.meet_join(a, s);
            EXPECT_EQ(m.kind, BracketKind::Angle);
            EXPECT_EQ(j.kind, BracketKind::Square);
            EXPECT_NE(p.compare(m, j), Relation::Incomparable) << to_string(a) << " " << to_string(s);
        }
    }
}

TEST(Poset, InvalidParametersThrow) {
    EXPECT_THROW(GluedPoset(4, 3, 0), DomainError);
    EXPECT_THROW(GluedPoset(2, 5, 3), DomainError);
    EXPECT_THROW(GluedPoset(2, 5, 0).chain_count(angle({1, 7})), DomainError);
}
