#include "shv/tropical.hpp"

#include <algorithm>
#include <numeric>

namespace shv {

namespace {

std::vector<std::size_t> zero_based(const Subset& s) {
    std::vector<std::size_t> out;
    for (int v : s) out.push_back(static_cast<std::size_t>(v - 1));
    return out;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out(to - from);
    std::iota(out.begin(), out.end(), from);
    return out;
}

void check_params(int k, int n, int r) {
    if (k < 1 || k > n || r < 0 || r > k || 2 * k > r + n) throw DomainError("need 0 <= r <= k and 2k <= r + n");
}

Rational hungarian(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    Rational inf = 1;
    for (const auto& row : a)
        for (const auto& v : row) inf += abs(v);
    inf *= static_cast<long>(4 * n + 4);
    std::vector<Rational> u(n + 1), v(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<Rational> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            Rational delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Rational cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    Rational total = 0;
    for (std::size_t j = 1; j <= n; ++j) total += a[p[j] - 1][j - 1];
    return total;
}

std::vector<std::vector<UniPoly>> select(const std::vector<std::vector<UniPoly>>& m,
                                         const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) {
    std::vector<std::vector<UniPoly>> out;
    for (auto i : rows) {
        std::vector<UniPoly> row;
        for (auto j : cols) row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

Subset pair(int i, int j) { return {i, j}; }

}  // namespace

const Rational& TropicalVector::at(const Subset& s) const {
    auto it = values.find(s);
    if (it == values.end()) throw DomainError("no tropical coordinate " + s_name(s));
    return it->second;
}

TropicalVector tropical_sum(const TropicalVector& a, const TropicalVector& b) {
    if (a.k != b.k || a.n != b.n) throw DomainError("tropical vectors of different shape");
    TropicalVector out{a.k, a.n, {}};
    for (const auto& [s, v] : a.values) out.values.emplace(s, v + b.at(s));
    return out;
}

Rational trop_minor(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw DomainError("trop_minor needs a square selection");
    for (auto i : rows)
        if (i >= a.rows()) throw DomainError("row index out of range");
    for (auto j : cols)
        if (j >= a.cols()) throw DomainError("column index out of range");
    const std::size_t m = rows.size();
    if (m == 0) return 0;
    std::vector<std::vector<Rational>> sub(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub[i][j] = a(rows[i], cols[j]);
    if (m > 6) return hungarian(sub);
    std::vector<std::size_t> perm = range(0, m);
    Rational best;
    bool first = true;
    do {
        Rational t = 0;
        for (std::size_t i = 0; i < m; ++i) t += sub[i][perm[i]];
        if (first || t < best) best = t;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

RationalMatrix valuation_matrix(int k, int n, int r, std::uint64_t seed) {
    check_params(k, n, r);
    Rng rng(seed);
    RationalMatrix a(static_cast<std::size_t>(n - k + r), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(0, 6);
    return a;
}

TropicalVector trop_angles(int k, int n, int r, const RationalMatrix& a) {
    check_params(k, n, r);
    TropicalVector out{k, n, {}};
    auto rows = range(0, static_cast<std::size_t>(k));
    for (const auto& s : subsets(n, k)) out.values.emplace(s, trop_minor(a, rows, zero_based(s)));
    return out;
}

TropicalVector trop_squares(int k, int n, int r, const RationalMatrix& a) {
    check_params(k, n, r);
    TropicalVector out{k, n, {}};
    auto rows = range(static_cast<std::size_t>(r), static_cast<std::size_t>(n - k + r));
    for (const auto& s : subsets(n, k))
        out.values.emplace(s, trop_minor(a, rows, zero_based(complement(s, n))));
    return out;
}

TropicalVector trop_mandelstam(int k, int n, int r, const RationalMatrix& a) {
    if (a.rows() != static_cast<std::size_t>(n - k + r) || a.cols() != static_cast<std::size_t>(n))
        throw DomainError("exponent matrix must be (n-k+r) x n");
    return tropical_sum(trop_angles(k, n, r, a), trop_squares(k, n, r, a));
}

TropicalVector trop_mandelstam_sample(int k, int n, int r, std::uint64_t seed) {
    return trop_mandelstam(k, n, r, valuation_matrix(k, n, r, seed));
}

unsigned t_valuation(const std::vector<std::vector<UniPoly>>& entries) {
    UniPoly d = bareiss_det(entries);
    if (d.is_zero()) throw DomainError("determinant vanishes identically");
    return d.valuation();
}

std::vector<std::vector<UniPoly>> t_matrix(const RationalMatrix& exponents, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<UniPoly>> out(exponents.rows());
    for (std::size_t i = 0; i < exponents.rows(); ++i)
        for (std::size_t j = 0; j < exponents.cols(); ++j) {
            const Rational& e = exponents(i, j);
            if (e.get_den() != 1 || sgn(e) < 0) throw DomainError("exponents must be nonnegative integers");
            out[i].push_back(UniPoly::monomial(rng.nonzero_rational(), static_cast<unsigned>(e.get_num().get_ui())));
        }
    return out;
}

TropicalVector valuation_sample(int k, int n, int r, std::uint64_t seed) {
    check_params(k, n, r);
    RationalMatrix a = valuation_matrix(k, n, r, seed);
    auto angle_rows = range(0, static_cast<std::size_t>(k));
    auto square_rows = range(static_cast<std::size_t>(r), static_cast<std::size_t>(n - k + r));
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        auto m = t_matrix(a, mix_seed(seed, attempt + 1));
        TropicalVector out{k, n, {}};
        try {
            for (const auto& s : subsets(n, k)) {
                unsigned va = t_valuation(select(m, angle_rows, zero_based(s)));
                unsigned vs = t_valuation(select(m, square_rows, zero_based(complement(s, n))));
                out.values.emplace(s, Rational(static_cast<long>(va + vs)));
            }
            return out;
        } catch (const DomainError&) {
        }
    }
    throw DomainError("valuation_sample: a bracket vanished in 100 coefficient draws");
}

const std::vector<LinearForm>& m250_forms() {
    static const std::vector<LinearForm> forms = [] {
        auto f = [](std::initializer_list<std::pair<int, int>> plus, std::pair<int, int> minus = {0, 0}) {
            LinearForm out;
            for (auto [i, j] : plus) out.push_back({pair(i, j), 1});
            if (minus.first) out.push_back({pair(minus.first, minus.second), -1});
            return out;
        };
        return std::vector<LinearForm>{
            f({{1, 2}, {1, 3}, {1, 4}, {1, 5}}), f({{1, 2}, {2, 3}, {2, 4}, {2, 5}}),
            f({{1, 3}, {2, 3}, {3, 4}, {3, 5}}), f({{1, 4}, {2, 4}, {3, 4}, {4, 5}}),
            f({{1, 5}, {2, 5}, {3, 5}, {4, 5}}), f({{1, 2}, {1, 3}, {2, 3}}, {4, 5}),
            f({{1, 2}, {1, 4}, {2, 4}}, {3, 5}),  f({{1, 2}, {1, 5}, {2, 5}}, {3, 4}),
            f({{3, 4}, {3, 5}, {4, 5}}, {1, 2}),  f({{1, 3}, {1, 4}, {3, 4}}, {2, 5}),
            f({{1, 3}, {1, 5}, {3, 5}}, {2, 4}),  f({{2, 4}, {2, 5}, {4, 5}}, {1, 3}),
            f({{1, 4}, {1, 5}, {4, 5}}, {2, 3}),  f({{2, 3}, {2, 5}, {3, 5}}, {1, 4}),
            f({{2, 3}, {2, 4}, {3, 4}}, {1, 5}),
        };
    }();
    return forms;
}

const std::vector<TropicalEquation>& m250_positive_equations() {
    static const std::vector<TropicalEquation> eqs = [] {
        using P = std::initializer_list<std::pair<int, int>>;
        auto e = [](P l, P r) {
            TropicalEquation out;
            for (auto [i, j] : l) out.lhs.push_back(pair(i, j));
            for (auto [i, j] : r) out.rhs.push_back(pair(i, j));
            return out;
        };
        return std::vector<TropicalEquation>{
            e({{1, 3}, {1, 5}}, {{1, 2}, {1, 4}}),
            e({{2, 4}}, {{1, 2}, {2, 3}, {2, 5}}),
            e({{1, 3}, {3, 5}}, {{2, 3}, {3, 4}}),
            e({{2, 4}}, {{1, 4}, {3, 4}, {4, 5}}),
            e({{1, 5}, {3, 5}}, {{2, 5}, {4, 5}}),
            e({{1, 3}, {4, 5}}, {{1, 2}, {2, 3}}),
            e({{2, 4}}, {{1, 2}, {1, 4}, {3, 5}}),
            e({{1, 5}, {3, 4}}, {{1, 2}, {2, 5}}),
            e({{1, 2}, {3, 5}}, {{3, 4}, {4, 5}}),
            e({{1, 3}, {2, 5}}, {{1, 4}, {3, 4}}),
            e({{1, 3}, {1, 5}, {3, 5}}, {{2, 4}}),
            e({{2, 4}}, {{1, 3}, {2, 5}, {4, 5}}),
            e({{1, 5}, {2, 3}}, {{1, 4}, {4, 5}}),
            e({{1, 4}, {3, 5}}, {{2, 3}, {2, 5}}),
            e({{2, 4}}, {{1, 5}, {2, 3}, {3, 4}}),
        };
    }();
    return eqs;
}

std::string to_string(const LinearForm& f) {
    std::string out;
    for (const auto& t : f) {
        if (!out.empty() || t.sign < 0) out += t.sign < 0 ? " - " : " + ";
        out += s_name(t.index);
    }
    return out;
}

std::string to_string(const TropicalEquation& e) {
    auto side = [](const std::vector<Subset>& v) {
        std::string out;
        for (const auto& s : v) out += (out.empty() ? "" : " (+) ") + s_name(s);
        return out;
    };
    return side(e.lhs) + " = " + side(e.rhs);
}

TropCheck tropical_basis_check_m250(const TropicalVector& v) {
    if (v.k != 2 || v.n != 5) throw DomainError("the 15-form test lives on k=2, n=5");
    for (const auto& f : m250_forms()) {
        Rational lo = v.at(f.front().index);
        for (const auto& t : f) lo = std::min(lo, v.at(t.index));
        int hits = 0;
        for (const auto& t : f) hits += v.at(t.index) == lo;
        if (hits < 2) return {false, to_string(f)};
    }
    return {};
}

TropCheck positive_trop_check_m250(const TropicalVector& v) {
    if (v.k != 2 || v.n != 5) throw DomainError("the signed equations live on k=2, n=5");
    auto side_min = [&](const std::vector<Subset>& side) {
        Rational lo = v.at(side.front());
        for (const auto& s : side) lo = std::min(lo, v.at(s));
        return lo;
    };
    for (const auto& e : m250_positive_equations())
        if (side_min(e.lhs) != side_min(e.rhs)) return {false, to_string(e)};
    return {};
}

RationalMatrix momentum_matrix_m250() {
    auto pairs = subsets(5, 2);
    RationalMatrix m(5, pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c)
        for (int v : pairs[c]) m(static_cast<std::size_t>(v - 1), c) = 1;
    return m;
}

std::vector<std::vector<Subset>> circuits_m250() {
    RationalMatrix m = momentum_matrix_m250();
    auto pairs = subsets(5, 2);
    const unsigned cols = static_cast<unsigned>(pairs.size());
    // A row-space vector supported inside S exists iff the columns outside S drop rank.
    auto supports_vector = [&](unsigned mask) {
        std::vector<std::size_t> outside;
        for (unsigned c = 0; c < cols; ++c)
            if (!(mask >> c & 1u)) outside.push_back(c);
        if (outside.empty()) return true;
        return m.submatrix(range(0, 5), outside).rank() < 5;
    };
    std::vector<bool> has(1u << cols);
    for (unsigned mask = 0; mask < (1u << cols); ++mask) has[mask] = supports_vector(mask);
    std::vector<unsigned> found;
    for (unsigned mask = 1; mask < (1u << cols); ++mask) {
        if (!has[mask]) continue;
        bool minimal = true;
        for (unsigned c = 0; c < cols && minimal; ++c)
            if ((mask >> c & 1u) && has[mask & ~(1u << c)]) minimal = false;
        if (minimal) found.push_back(mask);
    }
    std::vector<std::vector<Subset>> out;
    for (unsigned mask : found) {
        std::vector<Subset> support;
        for (unsigned c = 0; c < cols; ++c)
            if (mask >> c & 1u) support.push_back(pairs[c]);
        out.push_back(std::move(support));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::map<Subset, UniPoly> positive_family_mandelstam(int n, std::uint64_t seed) {
    if (n < 4) throw DomainError("positive family needs n >= 4");
    Rng rng(seed);
    // Strictly decreasing exponents; positive coefficients.
    std::vector<unsigned> b(static_cast<std::size_t>(n));
    unsigned e = 0;
    for (int i = n - 1; i >= 0; --i) {
        b[static_cast<std::size_t>(i)] = e;
        e += static_cast<unsigned>(rng.uniform(1, 3));
    }
    std::vector<UniPoly> nodes;
    for (int i = 0; i < n; ++i)
        nodes.push_back(UniPoly::monomial(make_rational(rng.uniform(1, 9), rng.uniform(1, 9)), b[static_cast<std::size_t>(i)]));
    std::vector<std::vector<UniPoly>> vdm(static_cast<std::size_t>(n - 2));
    for (std::size_t i = 0; i < vdm.size(); ++i)
        for (int j = 0; j < n; ++j) {
            UniPoly p = 1;
            for (std::size_t q = 0; q < i; ++q) p = p * nodes[static_cast<std::size_t>(j)];
            vdm[i].push_back(p);
        }
    auto all_rows = range(0, vdm.size());
    std::map<Subset, UniPoly> out;
    for (const auto& s : subsets(n, 2)) {
        UniPoly angle = bareiss_det(select(vdm, {0, 1}, zero_based(s)));
        UniPoly square = bareiss_det(select(vdm, all_rows, zero_based(complement(s, n))));
        if ((s[0] + s[1]) % 2 != 0) square = UniPoly(0) - square;
        out.emplace(s, angle * square);
    }
    return out;
}

TropicalVector positive_family_valuation(int n, std::uint64_t seed) {
    TropicalVector out{2, n, {}};
    for (const auto& [s, p] : positive_family_mandelstam(n, seed)) {
        if (p.is_zero()) throw DomainError("positive family produced a vanishing coordinate");
        out.values.emplace(s, Rational(static_cast<long>(p.valuation())));
    }
    return out;
}

}  // namespace shv
