#ifndef SHV_TEST_ORACLES_HPP
#define SHV_TEST_ORACLES_HPP

#include "shv/matrix.hpp"
#include "shv/polynomial.hpp"
#include "shv/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using shv::BigInt;
using shv::Rational;
using shv::RationalMatrix;
using shv::SparsePolynomial;

// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m(0, j)) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Rational term = m(0, j) * cofactor_det(m.submatrix(rows, cols));
        d += (j % 2 == 0) ? term : Rational(-term);
    }
    return d;
}

// min over all bijections rows -> cols.
inline Rational brute_trop_minor(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                                 std::vector<std::size_t> cols) {
    std::sort(cols.begin(), cols.end());
    bool first = true;
    Rational best = 0;
    do {
        Rational s = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) s += a(rows[i], cols[i]);
        if (first || s < best) best = s;
        first = false;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

// A(m, j) = sum_i (-1)^i C(m+1, i) (j+1-i)^m.
inline BigInt eulerian_closed(int m, int j) {
    BigInt total = 0;
    for (int i = 0; i <= j; ++i) {
        BigInt c = shv::binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(i));
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), BigInt(j + 1 - i).get_mpz_t(), static_cast<unsigned long>(m));
        total += (i % 2 == 0 ? BigInt(c * p) : BigInt(-c * p));
    }
    return total;
}

// Young's lattice covers: raise one entry by one, staying strictly increasing inside [n].
inline std::vector<std::vector<int>> young_covers(const std::vector<int>& s, int n) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int limit = i + 1 < s.size() ? s[i + 1] : n + 1;
        if (s[i] + 1 < limit) {
            auto t = s;
            ++t[i];
            out.push_back(t);
        }
    }
    return out;
}

inline BigInt young_chains(const std::vector<int>& s, int n) {
    auto covers = young_covers(s, n);
    if (covers.empty()) return 1;
    BigInt total = 0;
    for (const auto& t : covers) total += young_chains(t, n);
    return total;
}

// Semistandard tableaux of the k x 2 rectangle with entries in [n]: prod (n + content) / hook.
inline BigInt ssyt_two_columns(int k, int n) {
    Rational prod = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 2; ++j) prod *= Rational(n + j - i) / Rational((1 - j) + (k - 1 - i) + 1);
    return prod.get_num();
}

// Division remainder with respect to a list, by repeated leading-term cancellation.
inline SparsePolynomial reduce(SparsePolynomial f, const std::vector<SparsePolynomial>& basis) {
    SparsePolynomial rem(f.ring());
    while (!f.is_zero()) {
        auto [lm, lc] = f.leading_term();
        bool divided = false;
        for (const auto& g : basis) {
            auto [gm, gc] = g.leading_term();
            bool divides = true;
            for (std::size_t i = 0; i < lm.size(); ++i) divides = divides && gm[i] <= lm[i];
            if (!divides) continue;
            shv::Monomial q(lm.size());
            for (std::size_t i = 0; i < lm.size(); ++i) q[i] = static_cast<std::uint16_t>(lm[i] - gm[i]);
            f -= g * SparsePolynomial::monomial(f.ring(), q, Rational(lc / gc));
            divided = true;
            break;
        }
        if (!divided) {
            SparsePolynomial lead = SparsePolynomial::monomial(f.ring(), lm, lc);
            rem += lead;
            f -= lead;
        }
    }
    return rem;
}

inline SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g) {
    auto [fm, fc] = f.leading_term();
    auto [gm, gc] = g.leading_term();
    shv::Monomial a(fm.size()), b(fm.size());
    for (std::size_t i = 0; i < fm.size(); ++i) {
        auto l = std::max(fm[i], gm[i]);
        a[i] = static_cast<std::uint16_t>(l - fm[i]);
        b[i] = static_cast<std::uint16_t>(l - gm[i]);
    }
    return f * SparsePolynomial::monomial(f.ring(), a, Rational(1 / fc)) -
           g * SparsePolynomial::monomial(g.ring(), b, Rational(1 / gc));
}

// Buchberger's criterion, skipping pairs with coprime leading monomials.
inline bool is_groebner(const std::vector<SparsePolynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto a = basis[i].leading_term().first, b = basis[j].leading_term().first;
            bool coprime = true;
            for (std::size_t v = 0; v < a.size(); ++v) coprime = coprime && (a[v] == 0 || b[v] == 0);
            if (coprime) continue;
            if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    return true;
}

// Gradient of sum_I s_I log det(M_I) on the (3,6) chart, by Jacobi's formula, ordered (w, x, y, z).
inline std::array<std::complex<double>, 4> jacobi_gradient_36(const std::map<std::vector<int>, double>& s,
                                                               const std::array<std::complex<double>, 4>& p) {
    using C = std::complex<double>;
    const C x = p[0], y = p[1], z = p[2], w = p[3];
    Eigen::Matrix<C, 3, 6> m;
    m << 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, x, y, 0, 0, 1, 1, z, w;
    // d m / d(w, x, y, z): a single entry each.
    const std::array<std::pair<int, int>, 4> at{{{2, 5}, {1, 4}, {1, 5}, {2, 4}}};
    std::array<C, 4> grad{};
    for (const auto& [idx, sv] : s) {
        Eigen::Matrix<C, 3, 3> sub;
        for (int c = 0; c < 3; ++c) sub.col(c) = m.col(idx[c] - 1);
        Eigen::Matrix<C, 3, 3> inv = sub.inverse();
        for (int v = 0; v < 4; ++v) {
            auto [row, col] = at[v];
            for (int c = 0; c < 3; ++c)
                if (idx[c] - 1 == col) grad[v] += sv * inv(c, row);
        }
    }
    return grad;
}

}  // namespace oracle

#endif
