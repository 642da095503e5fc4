// Acceptance run: one PASS/FAIL line per criterion, with timing against its budget.
#include "oracles.hpp"

#include "shv/ideal.hpp"
#include "shv/io.hpp"
#include "shv/mandelstam.hpp"
#include "shv/poset.hpp"
#include "shv/scattering.hpp"
#include "shv/tropical.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace shv;

namespace {

struct Result {
    bool pass = true;
    bool only_known = false;  // every failure is the documented one
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Result()> body;
    bool expected_failure = false;
};

std::string kns(int k, int n, int r) {
    return "(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

bool zero(const Rational& q) { return sgn(q) == 0; }

const RationalMatrix kInstance{{4, 0, 7, 4, 9, 1}, {1, 3, 7, 2, 8, 9}, {1, 7, 9, 8, 0, 5}, {6, 6, 2, 2, 4, 2}};

Result generator_counts() {
    Result r;
    for (auto [k, n, rr, want] : std::vector<std::tuple<int, int, int, std::size_t>>{{2, 5, 0, 35}, {2, 6, 0, 66}, {3, 7, 1, 329}})
        if (generator_suite(k, n, rr).size() != want) r.fail("suite size " + kns(k, n, rr));
    auto s = generator_suite(3, 7, 1);
    if (s.plucker_angle.size() != 140 || s.plucker_square.size() != 140 || s.mixed.size() != 49) r.fail("140+140+49");
    for (int k = 1; k <= 4; ++k)
        for (int n = k; n <= 9; ++n)
            for (int rr = 0; rr <= k; ++rr) {
                if (2 * k > rr + n) continue;
                BigInt c = k - rr - 1 >= 0 ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - rr - 1)) : BigInt(0);
                if (BigInt(static_cast<unsigned long>(GluedPoset(k, n, rr).incomparable_pairs().mixed.size())) != c * c)
                    r.fail("mixed count " + kns(k, n, rr));
            }
    return r;
}

Result bidegrees() {
    Result r;
    auto coeffs = [](const BidegreePolynomial& b) {
        std::vector<std::tuple<unsigned, unsigned, BigInt>> out;
        for (const auto& [e, c] : b.terms) out.emplace_back(e.first, e.second, c);
        return out;
    };
    using T = std::vector<std::tuple<unsigned, unsigned, BigInt>>;
    if (coeffs(GluedPoset(2, 5, 0).bidegree()) != T{{3, 7, 5}, {4, 6, 10}, {5, 5, 12}, {6, 4, 10}, {7, 3, 5}})
        r.fail("(2,5,0)");
    if (coeffs(GluedPoset(2, 6, 0).bidegree()) != T{{6, 10, 28}, {7, 9, 70}, {8, 8, 90}, {9, 7, 70}, {10, 6, 28}})
        r.fail("(2,6,0)");
    if (GluedPoset(2, 6, 0).count_maximal_chains() != 286) r.fail("286 chains");
    if (coeffs(GluedPoset(3, 7, 1).bidegree()) !=
        T{{22, 26, 25872}, {23, 25, 77616}, {24, 24, 105840}, {25, 23, 77616}, {26, 22, 25872}})
        r.fail("(3,7,1) with prefactor (st)^22");
    if (GluedPoset(3, 7, 1).count_maximal_chains() != 312816) r.fail("312816 chains");
    return r;
}

Result kernel_membership() {
    Result r;
    r.only_known = true;
    int ok = 0, total = 0;
    for (auto [k, n, rr] : std::vector<std::tuple<int, int, int>>{
             {2, 4, 0}, {2, 4, 1}, {2, 4, 2}, {2, 5, 0}, {2, 6, 0}, {3, 6, 1}, {3, 7, 1}, {4, 5, 1}}) {
        ++total;
        const bool known = k == 4 && n == 5 && rr == 1;
        const int ok_before = ok;
        try {
            BracketRing ring(k, n);
            GluedPoset poset(k, n, rr);
            ParametrizationPhi phi(k, n, rr);
            auto suite = generator_suite(ring, poset);
            std::vector<SparsePolynomial> polys;
            std::multiset<Monomial> leads, pairs;
            for (const auto* g : suite.all()) {
                polys.push_back(g->poly);
                leads.insert(g->poly.leading_term().first);
            }
            if (rr < k)
                for (auto& p : pq_product_entries(ring, rr)) polys.push_back(p);
            auto inc = poset.incomparable_pairs();
            for (const auto* list : {&inc.angle_angle, &inc.square_square, &inc.mixed})
                for (const auto& [a, b] : *list) pairs.insert(ring.quadratic(a, b));
            bool toric_ok = true;
            for (const auto& [a, s] : inc.mixed) {
                auto bin = toric_binomial(ring, poset, a, s);
                std::vector<Monomial> images;
                for (const auto& [m, c] : bin.terms()) {
                    auto [u, v] = ring.factors(m);
                    auto x = phi.leading_monomial(u), y = phi.leading_monomial(v);
                    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::uint16_t>(x[i] + y[i]);
                    images.push_back(x);
                }
                toric_ok = toric_ok && images.size() == 2 && images[0] == images[1];
            }
            auto rep = verify_in_kernel(ring, phi, polys, 20, 0);
            if (!rep.ok)
                r.fail(kns(k, n, rr) + " " + rep.failure.value_or(""));
            else if (leads != pairs)
                r.fail(kns(k, n, rr) + " leading terms");
            else if (!toric_ok)
                r.fail(kns(k, n, rr) + " toric");
            else
                ++ok;
        } catch (const DomainError& e) {
            r.fail(kns(k, n, rr) + ": " + e.what());
        }
        if (ok == ok_before && !known) r.only_known = false;
    }
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " suites" + (r.pass ? "" : "; " + r.detail);
    return r;
}

Result pq_span() {
    Result r;
    for (auto [k, n, rr] : std::vector<std::tuple<int, int, int>>{{2, 5, 0}, {2, 6, 0}, {3, 6, 1}}) {
        BracketRing ring(k, n);
        GluedPoset poset(k, n, rr);
        auto pq = bilinear_coefficients(ring, pq_product_entries(ring, rr));
        std::vector<SparsePolynomial> mixed;
        for (const auto& g : generator_suite(ring, poset).mixed) mixed.push_back(g.poly);
        BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - rr - 1));
        if (BigInt(static_cast<unsigned long>(pq.rank())) != c * c) r.fail("rank " + kns(k, n, rr));
        if (!same_row_space(pq, bilinear_coefficients(ring, mixed))) r.fail("span " + kns(k, n, rr));
    }
    return r;
}

Result mandelstam_instance() {
    Result r;
    const std::map<Subset, long> want{{{1, 2, 3}, 12000},  {{1, 2, 4}, 6720},    {{1, 2, 5}, 8272},
                                      {{1, 2, 6}, -31584}, {{1, 3, 4}, -37760},  {{1, 3, 5}, 54784},
                                      {{1, 3, 6}, -35728}, {{1, 4, 5}, -38080},  {{1, 4, 6}, 92208},
                                      {{1, 5, 6}, -30832}, {{2, 3, 4}, -37920},  {{2, 3, 5}, 68288},
                                      {{2, 3, 6}, -108016}, {{2, 4, 5}, -82896}, {{2, 4, 6}, 82416},
                                      {{2, 5, 6}, 82720},  {{3, 4, 5}, 46592},   {{3, 4, 6}, 57664},
                                      {{3, 5, 6}, -19904}, {{4, 5, 6}, -88944}};
    auto s = hadamard(kinematics_from_parameters(3, 6, 1, kInstance));
    for (const auto& [sub, v] : want)
        if (s.at(sub) != v) r.fail(s_name(sub));
    return r;
}

Result membership_marginals() {
    Result r;
    for (int k = 2; k <= 4; ++k)
        for (int n = 2 * k; n <= 8; ++n)
            for (int rr = 0; rr < k; ++rr) {
                if (2 * k > rr + n) continue;
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    auto s = hadamard(psi_sample(k, n, rr, seed));
                    auto ring = mandelstam_ring(k, n);
                    auto vals = assignment(s, ring);
                    for (const auto& f : momentum_forms(k, n, rr))
                        if (!zero(f.eval(vals))) r.fail("momentum " + kns(k, n, rr));
                }
            }
    for (int n = 5; n <= 8; ++n)
        for (int rr = 0; rr <= 1; ++rr)
            for (std::uint64_t seed = 0; seed < 3; ++seed)
                if (!membership_k2(hadamard(psi_sample(2, n, rr, seed)), rr).member) r.fail("minors " + kns(2, n, rr));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = psi_sample(3, 6, 1, seed);
        auto m = marginal(hadamard(p));
        if (m.rank() != 4) r.fail("marginal rank");
        for (const auto& [ij, v] : hadamard(induced_k2_point(*p.parameters)).values)
            if (m(static_cast<std::size_t>(ij[0] - 1), static_cast<std::size_t>(ij[1] - 1)) != v) r.fail("marginal entry");
    }
    return r;
}

Result positivity() {
    Result r;
    auto s = hadamard(positive_sample(2, 5, 0));
    for (const auto& [ij, v] : s.values) {
        if (sgn(v) != ((ij[0] + ij[1]) % 2 == 0 ? 1 : -1)) r.fail("sign of " + s_name(ij));
    }
    const std::vector<std::vector<std::pair<Subset, int>>> vertices{
        {{{1, 2}, -1}, {{1, 3}, 1}, {{2, 4}, 1}, {{3, 4}, -1}}, {{{1, 3}, 1}, {{1, 4}, -1}, {{2, 3}, -1}, {{2, 4}, 1}},
        {{{1, 2}, -1}, {{1, 5}, 1}, {{2, 4}, 1}, {{4, 5}, -1}}, {{{1, 4}, -1}, {{1, 5}, 1}, {{2, 4}, 1}, {{2, 5}, -1}},
        {{{2, 3}, -1}, {{2, 4}, 1}, {{3, 5}, 1}, {{4, 5}, -1}}, {{{2, 4}, 1}, {{2, 5}, -1}, {{3, 4}, -1}, {{3, 5}, 1}}};
    for (const auto& v : vertices) {
        MandelstamTensor t{2, 5, {}};
        for (const auto& ij : subsets(5, 2)) t.values[ij] = 0;
        for (const auto& [ij, sign] : v) t.values[ij] = make_rational(sign, 4);
        if (!membership_k2(t, 0).member) r.fail("vertex");
    }
    auto w = strictness_witness_point();
    if (!(strictness_value(w) < 0)) r.fail("witness");
    return r;
}

Result tropical() {
    Result r;
    auto circuits = circuits_m250();
    if (circuits.size() != 30) r.fail(std::to_string(circuits.size()) + " circuits");
    for (const auto& form : m250_forms()) {
        std::vector<Subset> support;
        for (const auto& t : form) support.push_back(t.index);
        std::sort(support.begin(), support.end());
        if (std::find(circuits.begin(), circuits.end(), support) == circuits.end()) r.fail("support " + to_string(form));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto c = tropical_basis_check_m250(trop_mandelstam_sample(2, 5, 0, seed));
        if (!c.ok) r.fail("basis " + c.failing);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto c = positive_trop_check_m250(positive_family_valuation(5, seed));
        if (!c.ok) r.fail("positive " + c.failing);
    }
    return r;
}

Result exact_certificates() {
    Result r;
    const std::array<std::array<const char*, 4>, 4> table{{{"8453/5723", "6083/9263", "3713/1358", "3713/2198"},
                                                           {"6/11", "87/172", "-1/4", "-42/43"},
                                                           {"5/21", "5/36", "19/27", "38/69"},
                                                           {"6588/14911", "20988/9139", "-8601/125060", "17437/138528"}}};
    auto point = kinematics_from_parameters(3, 6, 1, kInstance);
    auto s = hadamard(point);
    auto taut = tautological_solutions_36(point);
    for (std::size_t i = 0; i < 4; ++i) {
        Point36 p;
        for (std::size_t j = 0; j < 4; ++j) p[j] = parse_rational(table[i][j]);
        auto res = residuals_36(s, p);
        if (!std::all_of(res.begin(), res.end(), zero)) r.fail("residual at row " + std::to_string(i));
        if (taut[i] != p) r.fail("tautological row " + std::to_string(i));
    }
    for (int n = 5; n <= 8; ++n)
        for (int l = 2; l <= n - 2; ++l)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto sp = sector_sample_k2(n, l, seed);
                auto res = residuals_k2(hadamard(sp.point), sp.x);
                if (!std::all_of(res.begin(), res.end(), zero)) r.fail("sector n=" + std::to_string(n));
            }
    return r;
}

Result scattering_counts() {
    Result r;
    SolveOptions opts;
    opts.tol = 1e-11;
    opts.dedup = 1e-6;
    std::ostringstream summary;
    for (int n = 5; n <= 7; ++n) {
        int good = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto point = psi_sample(2, n, 0, seed);
            auto result = solve(ScatteringProblem::make(hadamard(point)), opts);
            std::map<int, long> sizes;
            bool classified = true;
            for (const auto& sol : result.solutions) {
                auto c = sector_classify_k2(sol, point);
                if (c.sector)
                    sizes[*c.sector]++;
                else
                    classified = false;
            }
            bool ok = classified && static_cast<long>(result.solutions.size()) == result.expected;
            for (int l = 2; l <= n - 2; ++l) ok = ok && sizes[l] == oracle::eulerian_closed(n - 3, l - 2);
            if (ok)
                ++good;
            else
                r.fail("n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " +
                       std::to_string(result.solutions.size()) + " solutions");
        }
        summary << "n=" << n << " " << good << "/20; ";
    }
    auto count36 = [&](const MandelstamTensor& s) { return solve(ScatteringProblem::make(s), opts).solutions.size(); };
    std::size_t c = count36(hadamard(kinematics_from_parameters(3, 6, 1, kInstance)));
    if (c != 26) r.fail("(3,6) instance: " + std::to_string(c));
    summary << "(3,6) instance " << c;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::size_t m = count36(hadamard(psi_sample(3, 6, 1, seed)));
        summary << "," << m;
        if (m != 26) r.fail("(3,6) seed " + std::to_string(seed) + ": " + std::to_string(m));
    }
    r.detail = summary.str() + (r.pass ? "" : "; " + r.detail);
    return r;
}

Result eulerian_identities() {
    Result r;
    for (int n = 5; n <= 10; ++n) {
        BigInt total = 0;
        for (int j = 0; j < n - 3; ++j) {
            if (eulerian(n - 3, j) != oracle::eulerian_closed(n - 3, j)) r.fail("A(" + std::to_string(n - 3) + ")");
            total += eulerian(n - 3, j);
        }
        if (total != factorial(static_cast<unsigned>(n - 3))) r.fail("sum n=" + std::to_string(n));
        auto d = [](int nn, int l) { return l - 2 >= 0 && l - 2 < nn - 3 ? eulerian(nn - 3, l - 2) : BigInt(0); };
        for (int l = 2; l <= n - 2; ++l)
            if (d(n, l) != (l - 1) * d(n - 1, l) + (n - l - 1) * d(n - 1, l - 1)) r.fail("recursion n=" + std::to_string(n));
    }
    return r;
}

}  // namespace

int main() {
    // Criterion 3 includes (4,5,1), where 2k > r + n leaves SH(4,5,1) empty; it is reported, not hidden.
    std::vector<Criterion> criteria{
        {1, "generator counts", 5, generator_counts},
        {2, "bidegrees", 5, bidegrees},
        {3, "kernel membership", 60, kernel_membership, true},
        {4, "PQ^T rank and span", 30, pq_span},
        {5, "Mandelstam instance", 1, mandelstam_instance},
        {6, "membership and marginals", 60, membership_marginals},
        {7, "positivity", 5, positivity},
        {8, "tropical", 60, tropical},
        {9, "exact scattering certificates", 60, exact_certificates},
        {10, "scattering counts", 300, scattering_counts},
        {11, "Eulerian identities", 1, eulerian_identities},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) r.fail("over budget");
        std::printf("criterion %2d %-32s %s  %.2fs/%gs  %s%s\n", c.id, c.name, r.pass ? "PASS" : "FAIL", seconds,
                    c.budget_seconds, r.detail.c_str(), !r.pass && c.expected_failure && r.only_known ? "  [known]" : "");
        if (!r.pass && !(c.expected_failure && r.only_known)) ++unexpected;
    }
    std::fflush(stdout);
    return unexpected == 0 ? 0 : 1;
}
