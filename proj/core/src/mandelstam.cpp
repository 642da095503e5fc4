#include "shv/mandelstam.hpp"

#include <algorithm>

namespace shv {

namespace {

std::vector<std::size_t> zero_based(const Subset& s) {
    std::vector<std::size_t> out;
    for (int v : s) out.push_back(static_cast<std::size_t>(v - 1));
    return out;
}

std::vector<std::size_t> iota_rows(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(i);
    return out;
}

std::map<Subset, Rational> plucker_vector(const RationalMatrix& m) {
    std::map<Subset, Rational> out;
    auto rows = iota_rows(0, m.rows());
    for (const auto& s : subsets(static_cast<int>(m.cols()), static_cast<int>(m.rows())))
        out.emplace(s, minor(m, rows, zero_based(s)));
    return out;
}

}  // namespace

KinematicPoint KinematicPoint::from_matrices(const RationalMatrix& lambda, const RationalMatrix& lambda_tilde) {
    if (lambda.rows() != lambda_tilde.rows() || lambda.cols() != lambda_tilde.cols())
        throw DomainError("lambda and lambda_tilde must have the same shape");
    if (lambda.rows() > lambda.cols()) throw DomainError("need k <= n");
    KinematicPoint p;
    p.k = static_cast<int>(lambda.rows());
    p.n = static_cast<int>(lambda.cols());
    p.lambda = lambda;
    p.lambda_tilde = lambda_tilde;
    p.angles = plucker_vector(lambda);
    p.squares = plucker_vector(lambda_tilde);
    return p;
}

std::size_t KinematicPoint::pairing_rank() const {
    return (lambda * lambda_tilde.transpose()).rank();
}

KinematicPoint kinematics_from_parameters(int k, int n, int r, const RationalMatrix& x) {
    if (k < 1 || r < 0 || r > k || 2 * k > r + n) throw DomainError("need 0 <= r <= k and 2k <= r + n");
    auto m = static_cast<std::size_t>(n - k + r);
    if (x.rows() != m || x.cols() != static_cast<std::size_t>(n))
        throw DomainError("parameter matrix must be (n-k+r) x n");
    auto all_cols = iota_rows(0, static_cast<std::size_t>(n));
    RationalMatrix lambda = x.submatrix(iota_rows(0, static_cast<std::size_t>(k)), all_cols);
    RationalMatrix wperp = x.submatrix(iota_rows(static_cast<std::size_t>(r), m), all_cols);
    if (lambda.rank() != static_cast<std::size_t>(k)) throw DomainError("lambda is rank deficient");
    if (wperp.rank() != static_cast<std::size_t>(n - k)) throw DomainError("W-perp block is rank deficient");
    RationalMatrix lt = wperp.nullspace();
    auto wrows = iota_rows(static_cast<std::size_t>(r), m);
    for (const auto& J : subsets(n, k)) {
        Rational target = minor(x, wrows, zero_based(complement(J, n)));
        if (is_zero(target)) continue;
        int sum = 0;
        for (int v : J) sum += v;
        if ((sum - k) % 2 != 0) target = -target;
        Rational have = minor(lt, iota_rows(0, static_cast<std::size_t>(k)), zero_based(J));
        Rational f = target / have;
        for (std::size_t j = 0; j < lt.cols(); ++j) lt(0, j) *= f;
        auto p = KinematicPoint::from_matrices(lambda, lt);
        p.parameters = x;
        p.r = r;
        return p;
    }
    throw DomainError("all complementary minors vanish");
}

const Rational& MandelstamTensor::at(const Subset& s) const {
    auto it = values.find(s);
    if (it == values.end()) throw DomainError("no Mandelstam coordinate " + s_name(s));
    return it->second;
}

MandelstamTensor hadamard(const KinematicPoint& p) {
    MandelstamTensor t;
    t.k = p.k;
    t.n = p.n;
    for (const auto& [s, a] : p.angles) t.values.emplace(s, a * p.squares.at(s));
    return t;
}

std::string s_name(const Subset& s) {
    std::string out = "s[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "]";
}

RingPtr mandelstam_ring(int k, int n) {
    std::vector<std::string> names;
    for (const auto& s : subsets(n, k)) names.push_back(s_name(s));
    return Ring::make(std::move(names));
}

std::vector<Rational> assignment(const MandelstamTensor& s, const RingPtr& ring) {
    std::vector<Rational> out;
    for (const auto& sub : subsets(s.n, s.k)) out.push_back(s.at(sub));
    if (out.size() != ring->size()) throw DomainError("tensor and ring sizes differ");
    return out;
}

std::vector<SparsePolynomial> momentum_forms(int k, int n, int r) {
    if (k < 1 || k > n || r < 0 || r > k) throw DomainError("need 1 <= k <= n and 0 <= r <= k");
    std::vector<SparsePolynomial> out;
    if (r == k) return out;
    auto ring = mandelstam_ring(k, n);
    for (const auto& I : subsets(n, k - r - 1)) {
        SparsePolynomial f(ring);
        auto rest = complement(I, n);
        for (const auto& pick : subsets(static_cast<int>(rest.size()), r + 1)) {
            Subset s = I;
            for (int p : pick) s.push_back(rest[static_cast<std::size_t>(p - 1)]);
            std::sort(s.begin(), s.end());
            f += SparsePolynomial::variable(ring, ring->index(s_name(s)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

Dims dims(int k, int n, int r) {
    if (k < 1 || k > n || r < 0 || r > k || 2 * k > r + n) throw DomainError("invalid (k,n,r)");
    Dims d;
    d.dim_sh = 2L * k * (n - k) - static_cast<long>(k - r) * (k - r);
    d.dim_m = d.dim_sh - n + 1;
    d.ambient = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)).get_si() - 1;
    if (r < k) d.ambient -= binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - r - 1)).get_si();
    return d;
}

RationalMatrix marginal(const MandelstamTensor& s) {
    if (s.k < 2) throw DomainError("marginal needs k >= 2");
    RationalMatrix m(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.n));
    for (const auto& [sub, v] : s.values)
        for (std::size_t a = 0; a < sub.size(); ++a)
            for (std::size_t b = 0; b < sub.size(); ++b)
                if (a != b) m(static_cast<std::size_t>(sub[a] - 1), static_cast<std::size_t>(sub[b] - 1)) += v;
    return m;
}

Membership membership_k2(const MandelstamTensor& s, int r) {
    if (s.k != 2) throw DomainError("membership_k2 needs k = 2");
    if (r < 0 || r > 2) throw DomainError("membership_k2 needs r in {0,1,2}");
    Membership out;
    auto ring = mandelstam_ring(2, s.n);
    auto vals = assignment(s, ring);
    for (const auto& f : momentum_forms(2, s.n, r)) {
        if (!is_zero(f.eval(vals))) {
            out.member = false;
            out.violated = f.to_string();
            return out;
        }
    }
    RationalMatrix m = marginal(s);
    if (m.rank() <= 4) return out;
    for (const auto& rows : subsets(s.n, 5))
        for (const auto& cols : subsets(s.n, 5)) {
            if (is_zero(minor(m, zero_based(rows), zero_based(cols)))) continue;
            out.member = false;
            std::string rs, cs;
            for (int v : rows) rs += std::to_string(v);
            for (int v : cols) cs += std::to_string(v);
            out.violated = "det s[rows " + rs + ", cols " + cs + "]";
            return out;
        }
    return out;
}

RationalMatrix psi_parameters(int k, int n, int r, std::uint64_t seed) {
    if (k < 1 || r < 0 || r > k || 2 * k > r + n) throw DomainError("need 0 <= r <= k and 2k <= r + n");
    auto m = static_cast<std::size_t>(n - k + r);
    Rng rng(seed);
    RationalMatrix x(m, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = rng.nonzero_rational();
    auto kr = static_cast<std::size_t>(k - r);
    // Rows r+1..k carry the leading unit block.
    for (std::size_t t = 0; t < kr; ++t)
        for (std::size_t j = 0; j < kr; ++j) x(static_cast<std::size_t>(r) + t, j) = t == j ? 1 : 0;
    // Rows 1..r and rows k+1..n-k+r vanish there and each group opens its own unit block.
    std::vector<std::vector<std::size_t>> groups(2);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) groups[0].push_back(i);
    for (std::size_t i = static_cast<std::size_t>(k); i < m; ++i) groups[1].push_back(i);
    for (const auto& g : groups)
        for (std::size_t t = 0; t < g.size(); ++t) {
            for (std::size_t j = 0; j < kr; ++j) x(g[t], j) = 0;
            for (std::size_t j = 0; j < g.size(); ++j) x(g[t], kr + j) = t == j ? 1 : 0;
        }
    return x;
}

KinematicPoint psi_sample(int k, int n, int r, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        auto x = psi_parameters(k, n, r, mix_seed(seed, attempt));
        try {
            auto p = kinematics_from_parameters(k, n, r, x);
            bool generic = p.lambda_tilde.rank() == static_cast<std::size_t>(k);
            for (const auto& [sub, v] : p.angles)
                if (is_zero(v) || is_zero(p.squares.at(sub))) generic = false;
            if (generic) return p;
        } catch (const DomainError&) {
        }
    }
    throw DomainError("psi_sample: 100 degenerate draws in a row");
}

KinematicPoint positive_sample(int k, int n, std::uint64_t seed) {
    if (k < 1 || 2 * k > n) throw DomainError("positive_sample needs 2k <= n");
    Rng rng(seed);
    std::vector<long> nodes;
    long a = rng.uniform(1, 3);
    for (int i = 0; i < n; ++i) {
        nodes.push_back(a);
        a += rng.uniform(1, 3);
    }
    RationalMatrix v(static_cast<std::size_t>(n - k), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) {
            Rational p = 1;
            for (std::size_t e = 0; e < i; ++e) p *= nodes[j];
            v(i, j) = p;
        }
    auto p = kinematics_from_parameters(k, n, 0, v);
    if (k % 2 != 0) {
        RationalMatrix lt = p.lambda_tilde;
        for (std::size_t j = 0; j < lt.cols(); ++j) lt(0, j) = -lt(0, j);
        auto q = KinematicPoint::from_matrices(p.lambda, lt);
        q.parameters = p.parameters;
        q.r = 0;
        return q;
    }
    return p;
}

KinematicPoint induced_k2_point(const RationalMatrix& x) {
    int n = static_cast<int>(x.cols());
    if (x.rows() != static_cast<std::size_t>(n - 2)) throw DomainError("need a (n-2) x n parameter matrix");
    std::vector<std::size_t> order = {1, 2, 0};
    for (std::size_t i = 3; i < x.rows(); ++i) order.push_back(i);
    return kinematics_from_parameters(2, n, 0, x.submatrix(order, iota_rows(0, x.cols())));
}

KinematicPoint delete_column(const KinematicPoint& p, int col) {
    if (col < 1 || col > p.n) throw DomainError("column out of range");
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < static_cast<std::size_t>(p.n); ++j)
        if (j != static_cast<std::size_t>(col - 1)) keep.push_back(j);
    auto rows = iota_rows(0, static_cast<std::size_t>(p.k));
    return KinematicPoint::from_matrices(p.lambda.submatrix(rows, keep), p.lambda_tilde.submatrix(rows, keep));
}

Rational strictness_value(const MandelstamTensor& s) {
    if (s.k != 2 || s.n != 4) throw DomainError("strictness form lives on k=2, n=4");
    return s.at({1, 3}) * s.at({2, 4}) + s.at({1, 4}) * s.at({2, 3}) - s.at({1, 2}) * s.at({3, 4});
}

StrictnessSign classify_strictness(const MandelstamTensor& s) {
    int v = sgn(strictness_value(s));
    return v < 0 ? StrictnessSign::Negative : v == 0 ? StrictnessSign::Boundary : StrictnessSign::Positive;
}

bool has_positive_sign_pattern(const MandelstamTensor& s) {
    for (const auto& [sub, v] : s.values) {
        int sum = 0;
        for (int i : sub) sum += i;
        if (sgn(v) != (sum % 2 == 0 ? 1 : -1)) return false;
    }
    return true;
}

MandelstamTensor strictness_witness_point(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        MandelstamTensor s;
        s.k = 2;
        s.n = 4;
        for (const auto& sub : subsets(4, 2)) {
            long mag = rng.uniform(1, 20);
            s.values[sub] = (sub[0] + sub[1]) % 2 == 0 ? mag : -mag;
        }
        if (classify_strictness(s) == StrictnessSign::Negative) return s;
    }
    throw DomainError("no strictness witness found");
}

}  // namespace shv
