#include "shv/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shv {

namespace {

std::string x_name(int row, int col) {
    return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

std::vector<int> without(const std::vector<int>& v, std::size_t pos) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != pos) out.push_back(v[i]);
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

int parity(int v) { return (v % 2 == 0) ? 1 : -1; }

// Visits every size-m subset of positions {0..len-1} with the parity of chosen ++ rest.
template <typename F>
void for_each_shuffle(std::size_t len, std::size_t m, F&& visit) {
    for (const auto& pick : subsets(static_cast<int>(len), static_cast<int>(m))) {
        std::vector<std::size_t> chosen, rest;
        std::vector<int> perm;
        for (int p : pick) chosen.push_back(static_cast<std::size_t>(p - 1));
        for (std::size_t i = 0; i < len; ++i)
            if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) rest.push_back(i);
        for (auto c : chosen) perm.push_back(static_cast<int>(c));
        for (auto c : rest) perm.push_back(static_cast<int>(c));
        visit(chosen, rest, sort_sign(perm));
    }
}

/*
 * Subtracts already finished generators until the assigned pair leads.
 * Work proceeds from the largest pair downwards, so every monomial that
 * can lead is owned by a finished generator.
 */
std::vector<Generator> top_reduce(const BracketRing& ring, std::vector<Generator> gens) {
    std::map<Monomial, std::size_t> owner;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gens[i].leading = ring.quadratic(gens[i].pair.first, gens[i].pair.second);
        owner.emplace(gens[i].leading, i);
    }
    std::vector<std::size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return grevlex_compare(gens[a].leading, gens[b].leading) > 0;
    });
    std::vector<bool> done(gens.size(), false);
    for (auto i : order) {
        auto& g = gens[i];
        while (true) {
            auto [m, c] = g.poly.leading_term();
            if (m == g.leading) break;
            auto it = owner.find(m);
            if (grevlex_compare(m, g.leading) < 0 || it == owner.end() || !done[it->second])
                throw std::logic_error("generator for " + to_string(g.pair.first) + to_string(g.pair.second) +
                                       " has leading term " + monomial_to_string(m, *ring.ring()));
            const auto& h = gens[it->second].poly;
            g.poly -= h * (c / h.terms().at(m));
        }
        done[i] = true;
    }
    return gens;
}

void sort_by_leading(std::vector<Generator>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Generator& a, const Generator& b) { return grevlex_compare(a.leading, b.leading) < 0; });
}

}  // namespace

BracketRing::BracketRing(int k, int n) : k_(k), n_(n) {
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    order_ = canonical_linear_extension(k, n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        names.push_back(to_string(order_[i]));
        index_.emplace(order_[i], i);
    }
    ring_ = Ring::make(std::move(names));
}

std::size_t BracketRing::index(const Bracket& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) throw DomainError("bracket " + to_string(b) + " not in ring");
    return it->second;
}

SparsePolynomial BracketRing::var(const Bracket& b) const {
    return SparsePolynomial::variable(ring_, index(b));
}

SparsePolynomial BracketRing::signed_var(BracketKind kind, const std::vector<int>& raw, const Rational& c) const {
    auto nb = normalize_bracket(kind, raw, n_);
    if (nb.sign == 0) return SparsePolynomial(ring_);
    return var(nb.bracket) * (c * nb.sign);
}

Monomial BracketRing::quadratic(const Bracket& a, const Bracket& b) const {
    Monomial m(ring_->size(), 0);
    ++m[index(a)];
    ++m[index(b)];
    return m;
}

std::pair<Bracket, Bracket> BracketRing::factors(const Monomial& m) const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) out.push_back(order_[i]);
    if (out.size() != 2) throw DomainError("not a quadratic monomial");
    return {out[0], out[1]};
}

ParametrizationPhi::ParametrizationPhi(int k, int n, int r) : k_(k), n_(n), r_(r) {
    if (k < 1 || k > n || r < 0 || r > k) throw DomainError("need 1 <= k <= n and 0 <= r <= k");
    if (2 * k > r + n) throw DomainError("need 2k <= r + n");
    std::vector<std::string> names;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= n; ++j) names.push_back(x_name(i, j));
    xring_ = Ring::make(std::move(names));
}

std::size_t ParametrizationPhi::x_index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
}

void ParametrizationPhi::check(const Bracket& b) const {
    if (static_cast<int>(b.indices.size()) != k_ || sort_sign(b.indices) != 1 || b.indices.front() < 1 ||
        b.indices.back() > n_)
        throw DomainError("bracket " + to_string(b) + " invalid for this parametrization");
}

int ParametrizationPhi::square_sign(const Bracket& b) const {
    if (b.kind == BracketKind::Angle) return 1;
    return parity(b.sum() - k_);
}

std::vector<std::size_t> ParametrizationPhi::row_range(const Bracket& b) const {
    std::vector<std::size_t> rows;
    if (b.kind == BracketKind::Angle)
        for (int i = 0; i < k_; ++i) rows.push_back(static_cast<std::size_t>(i));
    else
        for (int i = r_; i < n_ - k_ + r_; ++i) rows.push_back(static_cast<std::size_t>(i));
    return rows;
}

std::vector<int> ParametrizationPhi::column_set(const Bracket& b) const {
    return b.kind == BracketKind::Angle ? b.indices : complement(b.indices, n_);
}

SparsePolynomial ParametrizationPhi::image(const Bracket& b) const {
    check(b);
    auto rows = row_range(b);
    auto cols = column_set(b);
    SparsePolynomial p(xring_);
    std::vector<int> perm(cols.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Monomial m(xring_->size(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            ++m[x_index(static_cast<int>(rows[i]) + 1, cols[static_cast<std::size_t>(perm[i])])];
        p.add_term(m, Rational(sort_sign(perm) * square_sign(b)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

Rational ParametrizationPhi::value(const Bracket& b, const RationalMatrix& x) const {
    check(b);
    if (static_cast<int>(x.rows()) != rows() || static_cast<int>(x.cols()) != n_)
        throw DomainError("parameter matrix has the wrong shape");
    std::vector<std::size_t> cols;
    for (int c : column_set(b)) cols.push_back(static_cast<std::size_t>(c - 1));
    return minor(x, row_range(b), cols) * square_sign(b);
}

std::vector<Rational> ParametrizationPhi::values(const BracketRing& ring, const RationalMatrix& x) const {
    if (ring.k() != k_ || ring.n() != n_) throw DomainError("ring and parametrization disagree on (k,n)");
    std::vector<Rational> out;
    out.reserve(ring.order().size());
    for (const auto& b : ring.order()) out.push_back(value(b, x));
    return out;
}

Monomial ParametrizationPhi::leading_monomial(const Bracket& b) const {
    check(b);
    auto rows = row_range(b);
    auto cols = column_set(b);
    Monomial m(xring_->size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) ++m[x_index(static_cast<int>(rows[i]) + 1, cols[i])];
    return m;
}

RationalMatrix ParametrizationPhi::random_matrix(std::uint64_t seed) const {
    Rng rng(seed);
    RationalMatrix x(static_cast<std::size_t>(rows()), static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = rng.small_rational();
    return x;
}

SparsePolynomial plucker_relation(const BracketRing& ring, const std::vector<int>& prefix,
                                  const std::vector<int>& window, BracketKind kind) {
    int k = ring.k();
    if (static_cast<int>(prefix.size()) != k - 1 || static_cast<int>(window.size()) != k + 1)
        throw DomainError("Plücker relation needs a (k-1)-prefix and a (k+1)-window");
    SparsePolynomial p(ring.ring());
    for (std::size_t s = 0; s < window.size(); ++s) {
        auto left = ring.signed_var(kind, concat(prefix, {window[s]}), parity(static_cast<int>(s)));
        auto right = ring.signed_var(kind, without(window, s));
        p += left * right;
    }
    return p;
}

SparsePolynomial garnir_relation(const BracketRing& ring, const Bracket& a, const Bracket& b) {
    if (a.kind != b.kind) throw DomainError("garnir_relation expects two brackets of the same kind");
    const auto& top = a.indices;
    const auto& bot = b.indices;
    std::size_t k = top.size();
    std::size_t s = 0;
    while (s < k && top[s] <= bot[s]) ++s;
    if (s == k) throw DomainError("rows already standard: " + to_string(a) + to_string(b));
    std::vector<int> merged(bot.begin(), bot.begin() + static_cast<long>(s) + 1);
    merged.insert(merged.end(), top.begin() + static_cast<long>(s), top.end());
    SparsePolynomial p(ring.ring());
    for_each_shuffle(merged.size(), k - s, [&](const auto& chosen, const auto& rest, int sign) {
        std::vector<int> x(top.begin(), top.begin() + static_cast<long>(s));
        for (auto c : chosen) x.push_back(merged[c]);
        std::vector<int> y;
        for (auto c : rest) y.push_back(merged[c]);
        y.insert(y.end(), bot.begin() + static_cast<long>(s) + 1, bot.end());
        p += ring.signed_var(a.kind, x, sign) * ring.signed_var(a.kind, y);
    });
    return p;
}

SparsePolynomial straightening_generator(const BracketRing& ring, const GluedPoset& poset, const Bracket& a,
                                         const Bracket& s) {
    if (a.kind != BracketKind::Angle || s.kind != BracketKind::Square)
        throw DomainError("straightening_generator expects (angle, square)");
    if (poset.compare(a, s) != Relation::Incomparable)
        throw DomainError("pair " + to_string(a) + to_string(s) + " is comparable");
    int k = poset.k(), n = poset.n(), r = poset.r();
    auto top = complement(s.indices, n);
    const auto& bot = a.indices;
    // Leftmost column of the skew tableau that is out of order.
    int l = 1;
    while (bot[static_cast<std::size_t>(r + l - 1)] >= top[static_cast<std::size_t>(l - 1)]) ++l;
    std::vector<int> merged(bot.begin(), bot.begin() + r + l);
    merged.insert(merged.end(), top.begin() + l - 1, top.end());
    std::vector<int> fixed_angle(bot.begin() + r + l, bot.end());
    std::vector<int> fixed_top(top.begin(), top.begin() + l - 1);
    SparsePolynomial p(ring.ring());
    for_each_shuffle(merged.size(), static_cast<std::size_t>(r + l), [&](const auto& chosen, const auto& rest,
                                                                        int sign) {
        std::vector<int> x;
        for (auto c : chosen) x.push_back(merged[c]);
        x.insert(x.end(), fixed_angle.begin(), fixed_angle.end());
        std::vector<int> y = fixed_top;
        for (auto c : rest) y.push_back(merged[c]);
        int sx = sort_sign(x), sy = sort_sign(y);
        if (sx == 0 || sy == 0) return;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        Bracket sq = square(complement(y, n));
        int dual = parity(sq.sum() - k);
        p += ring.var(angle(x)) * ring.var(sq) * Rational(sign * sx * sy * dual);
    });
    return p;
}

PQMatrices pq_matrices(int k, int n, int r) {
    if (k < 1 || k > n || r < 0 || r > k) throw DomainError("need 1 <= k <= n and 0 <= r <= k");
    PQMatrices out;
    if (r == k) return out;
    out.row_labels = subsets(n, k - r - 1);
    out.col_labels = subsets(n, r + 1);
    for (const auto& I : out.row_labels) {
        std::vector<PQEntry> prow, qrow;
        for (const auto& J : out.col_labels) {
            auto a = normalize_bracket(BracketKind::Angle, concat(I, J), n);
            auto b = normalize_bracket(BracketKind::Square, concat(I, J), n);
            prow.push_back({a.sign, a.bracket});
            qrow.push_back({b.sign, b.bracket});
        }
        out.P.push_back(std::move(prow));
        out.Q.push_back(std::move(qrow));
    }
    return out;
}

std::vector<SparsePolynomial> pq_product_entries(const BracketRing& ring, int r) {
    auto pq = pq_matrices(ring.k(), ring.n(), r);
    std::vector<SparsePolynomial> out;
    for (std::size_t i = 0; i < pq.row_labels.size(); ++i)
        for (std::size_t j = 0; j < pq.row_labels.size(); ++j) {
            SparsePolynomial f(ring.ring());
            for (std::size_t l = 0; l < pq.col_labels.size(); ++l) {
                const auto& p = pq.P[i][l];
                const auto& q = pq.Q[j][l];
                if (p.sign == 0 || q.sign == 0) continue;
                f += ring.var(p.bracket) * ring.var(q.bracket) * Rational(p.sign * q.sign);
            }
            out.push_back(std::move(f));
        }
    return out;
}

SparsePolynomial toric_binomial(const BracketRing& ring, const GluedPoset& poset, const Bracket& a,
                                const Bracket& s) {
    auto [join, meet] = poset.meet_join(a, s);
    int sign = parity(s.sum() + meet.sum());
    return ring.var(a) * ring.var(s) - ring.var(join) * ring.var(meet) * Rational(sign);
}

std::vector<const Generator*> GeneratorSuite::all() const {
    std::vector<const Generator*> out;
    for (const auto* list : {&plucker_angle, &plucker_square, &mixed})
        for (const auto& g : *list) out.push_back(&g);
    return out;
}

GeneratorSuite generator_suite(const BracketRing& ring, const GluedPoset& poset) {
    if (ring.k() != poset.k() || ring.n() != poset.n()) throw DomainError("ring and poset disagree on (k,n)");
    auto pairs = poset.incomparable_pairs();
    GeneratorSuite suite;
    suite.k = poset.k();
    suite.n = poset.n();
    suite.r = poset.r();
    auto build_same = [&](const std::vector<std::pair<Bracket, Bracket>>& list) {
        std::vector<Generator> gens;
        for (const auto& [a, b] : list) gens.push_back({garnir_relation(ring, a, b), {a, b}, {}});
        gens = top_reduce(ring, std::move(gens));
        sort_by_leading(gens);
        return gens;
    };
    suite.plucker_angle = build_same(pairs.angle_angle);
    suite.plucker_square = build_same(pairs.square_square);
    std::vector<Generator> mixed;
    for (const auto& [a, s] : pairs.mixed) mixed.push_back({straightening_generator(ring, poset, a, s), {a, s}, {}});
    suite.mixed = top_reduce(ring, std::move(mixed));
    sort_by_leading(suite.mixed);
    return suite;
}

GeneratorSuite generator_suite(int k, int n, int r) {
    GluedPoset poset(k, n, r);
    BracketRing ring(k, n);
    return generator_suite(ring, poset);
}

VerificationReport verify_in_kernel(const BracketRing& ring, const ParametrizationPhi& phi,
                                    const std::vector<SparsePolynomial>& polys, std::size_t samples,
                                    std::uint64_t seed) {
    VerificationReport rep;
    rep.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        auto vals = phi.values(ring, phi.random_matrix(mix_seed(seed, s)));
        for (const auto& p : polys) {
            ++rep.evaluations;
            if (!is_zero(p.eval(vals))) {
                rep.ok = false;
                rep.failure = p.to_string();
                return rep;
            }
        }
    }
    return rep;
}

SparsePolynomial phi_pullback(const BracketRing& ring, const ParametrizationPhi& phi, const SparsePolynomial& p) {
    std::vector<SparsePolynomial> images;
    for (const auto& b : ring.order()) images.push_back(phi.image(b));
    return p.compose(images, phi.ring());
}

RationalMatrix bilinear_coefficients(const BracketRing& ring, const std::vector<SparsePolynomial>& polys) {
    std::size_t N = ring.order().size() / 2;
    std::vector<std::size_t> slot(ring.order().size());
    std::size_t ai = 0, si = 0;
    for (std::size_t i = 0; i < ring.order().size(); ++i)
        slot[i] = ring.order()[i].kind == BracketKind::Angle ? ai++ : si++;
    RationalMatrix m(polys.size(), N * N);
    for (std::size_t row = 0; row < polys.size(); ++row)
        for (const auto& [mono, c] : polys[row].terms()) {
            auto [x, y] = ring.factors(mono);
            if (x.kind == y.kind) throw DomainError("not a bilinear form: " + polys[row].to_string());
            const Bracket& a = x.kind == BracketKind::Angle ? x : y;
            const Bracket& s = x.kind == BracketKind::Angle ? y : x;
            m(row, slot[ring.index(a)] * N + slot[ring.index(s)]) = c;
        }
    return m;
}

}  // namespace shv
