#include "oracles.hpp"

#include "shv/ideal.hpp"
#include "shv/tropical.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace shv;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST(TropMinor, MatchesBruteForce) {
    Rng rng(3);
    for (std::size_t size = 1; size <= 8; ++size) {
        RationalMatrix a(size, size + 2);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size + 2; ++j) a(i, j) = rng.uniform(-5, 9);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < size + 2; ++j)
                if (cols.size() < size && (rng.uniform(0, 2) > 0 || size + 2 - j == size - cols.size())) cols.push_back(j);
            EXPECT_EQ(trop_minor(a, iota(size), cols), oracle::brute_trop_minor(a, iota(size), cols)) << size;
        }
    }
}

TEST(TropMinor, IdentityAndShift) {
    RationalMatrix a{{0, 5}, {5, 0}};
    EXPECT_EQ(trop_minor(a, {0, 1}, {0, 1}), 0);
    RationalMatrix b{{3, 1}, {1, 3}};
    EXPECT_EQ(trop_minor(b, {0, 1}, {0, 1}), 2);
}

TEST(TValuation, AgreesWithTropMinorGenerically) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RationalMatrix exps = valuation_matrix(2, 5, 0, seed);
        auto t = t_matrix(exps, seed);
        for (const auto& cols : subsets(5, 3)) {
            std::vector<std::size_t> c;
            for (int j : cols) c.push_back(static_cast<std::size_t>(j - 1));
            std::vector<std::vector<UniPoly>> sub;
            for (std::size_t i = 0; i < 3; ++i) {
                std::vector<UniPoly> row;
                for (std::size_t j : c) row.push_back(t[i][j]);
                sub.push_back(row);
            }
            // The lowest exponent can only cancel upward.
            EXPECT_GE(Rational(t_valuation(sub)), trop_minor(exps, iota(3), c));
        }
    }
}

TEST(TValuation, SingleTermDeterminant) {
    std::vector<std::vector<UniPoly>> m{{UniPoly::monomial(2, 3), 0}, {0, UniPoly::monomial(5, 1)}};
    EXPECT_EQ(t_valuation(m), 4u);
    std::vector<std::vector<UniPoly>> zero{{1, 1}, {1, 1}};
    EXPECT_THROW(t_valuation(zero), DomainError);
}

TEST(TropicalMandelstam, IsSumOfAnglesAndSquares) {
    RationalMatrix a = valuation_matrix(2, 6, 0, 4);
    auto sum = tropical_sum(trop_angles(2, 6, 0, a), trop_squares(2, 6, 0, a));
    EXPECT_EQ(sum, trop_mandelstam(2, 6, 0, a));
}

TEST(TropicalMandelstam, ValuationsBoundedByTropicalization) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto exact = valuation_sample(2, 5, 0, seed);
        auto trop = trop_mandelstam(2, 5, 0, valuation_matrix(2, 5, 0, seed));
        for (const auto& [ij, v] : exact.values) EXPECT_GE(v, trop.at(ij)) << s_name(ij);
    }
}

TEST(Circuits, ThirtyWithTheFormSupports) {
    auto circuits = circuits_m250();
    EXPECT_EQ(circuits.size(), 30u);
    std::set<std::vector<Subset>> unique(circuits.begin(), circuits.end());
    EXPECT_EQ(unique.size(), 30u);
    EXPECT_EQ(m250_forms().size(), 15u);
    for (const auto& form : m250_forms()) {
        std::vector<Subset> support;
        for (const auto& t : form) support.push_back(t.index);
        std::sort(support.begin(), support.end());
        EXPECT_EQ(support.size(), 4u);
        EXPECT_TRUE(unique.count(support)) << to_string(form);
    }
}

TEST(Circuits, AreMinimalSupportsOfMomentumForms) {
    // A support C carries a form from the row space iff the columns outside C lose rank.
    RationalMatrix m = momentum_matrix_m250();
    const std::size_t full = m.rank();
    auto pairs = subsets(5, 2);
    std::vector<std::size_t> rows = iota(m.rows());
    auto outside_rank = [&](const std::set<Subset>& keep) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (!keep.count(pairs[j])) cols.push_back(j);
        return cols.empty() ? std::size_t{0} : m.submatrix(rows, cols).rank();
    };
    for (const auto& c : circuits_m250()) {
        std::set<Subset> support(c.begin(), c.end());
        EXPECT_LT(outside_rank(support), full);
        for (const auto& drop : c) {
            auto smaller = support;
            smaller.erase(drop);
            EXPECT_EQ(outside_rank(smaller), full);
        }
    }
}

TEST(Forms, VanishOnTheVariety) {
    auto ring = mandelstam_ring(2, 5);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto s = hadamard(psi_sample(2, 5, 0, seed));
        for (const auto& form : m250_forms()) {
            Rational total = 0;
            for (const auto& t : form) total += t.sign * s.at(t.index);
            EXPECT_EQ(total, 0) << to_string(form);
        }
    }
}

TEST(Forms, PositiveEquationsSplitFormsBySign) {
    auto eqs = m250_positive_equations();
    ASSERT_EQ(eqs.size(), 15u);
    std::set<std::pair<std::set<Subset>, std::set<Subset>>> derived;
    // On the positive region s_ij has sign (-1)^(i+j).
    auto region_sign = [](const Subset& ij) { return (ij[0] + ij[1]) % 2 == 0 ? 1 : -1; };
    for (const auto& form : m250_forms()) {
        std::set<Subset> plus, minus;
        for (const auto& t : form) (t.sign * region_sign(t.index) > 0 ? plus : minus).insert(t.index);
        derived.insert({plus, minus});
        derived.insert({minus, plus});
    }
    for (const auto& e : eqs) {
        std::set<Subset> l(e.lhs.begin(), e.lhs.end()), r(e.rhs.begin(), e.rhs.end());
        EXPECT_TRUE(derived.count({l, r})) << to_string(e);
    }
}

TEST(BasisCheck, SamplesPass) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto res = tropical_basis_check_m250(trop_mandelstam_sample(2, 5, 0, seed));
        EXPECT_TRUE(res.ok) << seed << " " << res.failing;
    }
}

TEST(BasisCheck, GenericVectorFails) {
    TropicalVector v{2, 5, {}};
    Rational x = 0;
    for (const auto& ij : subsets(5, 2)) v.values[ij] = (x += 1) * x;
    EXPECT_FALSE(tropical_basis_check_m250(v).ok);
}

TEST(PositiveTropical, FamiliesPass) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto res = positive_trop_check_m250(positive_family_valuation(5, seed));
        EXPECT_TRUE(res.ok) << seed << " " << res.failing;
    }
}

TEST(PositiveTropical, FamilyValuationsMatchLowestTerms) {
    auto fam = positive_family_mandelstam(5, 2);
    auto val = positive_family_valuation(5, 2);
    for (const auto& [ij, p] : fam) EXPECT_EQ(Rational(p.valuation()), val.at(ij));
}
