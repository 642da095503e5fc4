#include "shv/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace shv {

namespace {

bool vanishes(const Rational& q) { return sgn(q) == 0; }
bool vanishes(const Complex& c) { return c == Complex(0.0, 0.0); }

Rational as(const Rational& q, const Rational*) { return q; }
Complex as(const Rational& q, const Complex*) { return Complex(q.get_d(), 0.0); }

template <typename T>
std::vector<T> residuals_k2_impl(const MandelstamTensor& s, const std::vector<T>& x) {
    if (s.k != 2) throw DomainError("residuals_k2 needs k = 2");
    if (x.size() != static_cast<std::size_t>(s.n)) throw DomainError("need one point per particle");
    std::vector<T> out(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i == j) continue;
            T d = x[i] - x[j];
            if (vanishes(d))
                throw DomainError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
            int a = static_cast<int>(std::min(i, j)) + 1, b = static_cast<int>(std::max(i, j)) + 1;
            out[i] += as(s.at({a, b}), static_cast<const T*>(nullptr)) / d;
        }
    return out;
}

template <typename T>
std::array<T, 4> residuals_36_impl(const MandelstamTensor& s, const std::array<T, 4>& p) {
    if (s.k != 3 || s.n != 6) throw DomainError("residuals_36 needs k = 3, n = 6");
    const T& x = p[0];
    const T& y = p[1];
    const T& z = p[2];
    const T& w = p[3];
    const T one(1);
    T dxy = w * x - y * z;
    T e = dxy - w - x + y + z;
    const std::pair<const char*, T> divisors[] = {
        {"z", z},         {"w", w},         {"x", x},         {"y", y},         {"z-x", z - x},
        {"w-y", w - y},   {"wx-yz", dxy},   {"1-z", one - z}, {"1-w", one - w}, {"z-w", z - w},
        {"x-1", x - one}, {"y-1", y - one}, {"y-x", y - x},   {"wx-yz-w-x+y+z", e},
    };
    for (const auto& [name, v] : divisors)
        if (vanishes(v)) throw DomainError(std::string("point lies on the boundary divisor ") + name + " = 0");
    auto c = [&](std::initializer_list<int> idx) { return as(s.at(Subset(idx)), static_cast<const T*>(nullptr)); };
    std::array<T, 4> out;
    out[0] = c({1, 2, 6}) / w + c({1, 4, 6}) / (w - y) + c({1, 5, 6}) * x / dxy - c({2, 4, 6}) / (one - w) -
             c({2, 5, 6}) / (z - w) + c({4, 5, 6}) * (x - one) / e;
    out[1] = c({1, 3, 5}) / x - c({1, 4, 5}) / (z - x) + c({1, 5, 6}) * w / dxy + c({3, 4, 5}) / (x - one) -
             c({3, 5, 6}) / (y - x) + c({4, 5, 6}) * (w - one) / e;
    out[2] = c({1, 3, 6}) / y - c({1, 4, 6}) / (w - y) - c({1, 5, 6}) * z / dxy + c({3, 4, 6}) / (y - one) +
             c({3, 5, 6}) / (y - x) + c({4, 5, 6}) * (one - z) / e;
    out[3] = c({1, 2, 5}) / z + c({1, 4, 5}) / (z - x) - c({1, 5, 6}) * y / dxy - c({2, 4, 5}) / (one - z) +
             c({2, 5, 6}) / (z - w) + c({4, 5, 6}) * (one - y) / e;
    return out;
}

SparsePolynomial symbolic_det(const std::vector<std::vector<SparsePolynomial>>& m, RingPtr ring) {
    const std::size_t k = m.size();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePolynomial out(ring);
    do {
        SparsePolynomial t = SparsePolynomial::constant(ring, sort_sign(perm));
        for (std::size_t i = 0; i < k; ++i) t = t * m[i][static_cast<std::size_t>(perm[i])];
        out += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

double inf_norm(const ComplexVector& v) {
    double m = 0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

bool finite(const ComplexVector& v) {
    for (const auto& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

}  // namespace

std::vector<Rational> residuals_k2(const MandelstamTensor& s, const std::vector<Rational>& x) {
    return residuals_k2_impl(s, x);
}

ComplexVector residuals_k2(const MandelstamTensor& s, const ComplexVector& x) { return residuals_k2_impl(s, x); }

UniPoly t_numerator(const MandelstamTensor& s, const std::vector<Rational>& x) {
    if (s.k != 2 || x.size() != static_cast<std::size_t>(s.n)) throw DomainError("need k = 2 and n points");
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw DomainError("coincident points");
    UniPoly total;
    for (const auto& pr : subsets(s.n, 2)) {
        UniPoly t = s.at(pr);
        for (int m = 1; m <= s.n; ++m)
            if (m != pr[0] && m != pr[1]) t = t * (UniPoly::monomial(1, 1) - UniPoly(x[static_cast<std::size_t>(m - 1)]));
        total = total + t;
    }
    return total;
}

bool t_function_check(const MandelstamTensor& s, const std::vector<Rational>& x) {
    return t_numerator(s, x).is_zero();
}

std::array<Rational, 4> residuals_36(const MandelstamTensor& s, const Point36& p) { return residuals_36_impl(s, p); }

std::array<Complex, 4> residuals_36(const MandelstamTensor& s, const std::array<Complex, 4>& p) {
    return residuals_36_impl(s, p);
}

Gauge gauge_k2(int n) {
    if (n < 4) throw DomainError("k=2 gauge needs n >= 4");
    std::vector<std::string> names;
    for (int i = 3; i < n; ++i) names.push_back("x[" + std::to_string(i) + "]");
    Gauge g{2, n, Ring::make(names), {}};
    auto c = [&](long v) { return SparsePolynomial::constant(g.ring, v); };
    g.columns.push_back({c(1), c(0)});
    g.columns.push_back({c(1), c(1)});
    for (std::size_t i = 0; i + 3 < static_cast<std::size_t>(n); ++i)
        g.columns.push_back({c(1), SparsePolynomial::variable(g.ring, i)});
    g.columns.push_back({c(0), c(1)});
    return g;
}

Gauge gauge_36() {
    Gauge g{3, 6, Ring::make({"x", "y", "z", "w"}), {}};
    auto c = [&](long v) { return SparsePolynomial::constant(g.ring, v); };
    auto v = [&](std::size_t i) { return SparsePolynomial::variable(g.ring, i); };
    g.columns = {{c(1), c(0), c(0)}, {c(0), c(1), c(0)}, {c(0), c(0), c(1)},
                 {c(1), c(1), c(1)}, {c(1), v(0), v(2)}, {c(1), v(1), v(3)}};
    return g;
}

ScatteringSystem::Compiled ScatteringSystem::compile(const SparsePolynomial& p) {
    Compiled out;
    for (const auto& [m, c] : p.terms()) {
        Term t{c.get_d(), {}};
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t.powers.emplace_back(i, m[i]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

Complex ScatteringSystem::Compiled::eval(const ComplexVector& u) const {
    Complex total = 0;
    for (const auto& t : terms) {
        Complex v = t.coeff;
        for (const auto& [i, e] : t.powers)
            for (unsigned q = 0; q < e; ++q) v *= u[i];
        total += v;
    }
    return total;
}

ScatteringSystem::ScatteringSystem(const MandelstamTensor& s, Gauge gauge) : gauge_(std::move(gauge)) {
    if (s.k != gauge_.k || s.n != gauge_.n) throw DomainError("tensor and gauge shapes differ");
    Rational scale = 0;
    for (const auto& [sub, v] : s.values) scale = std::max(scale, Rational(abs(v)));
    if (sgn(scale) == 0) throw DomainError("all Mandelstam invariants vanish");
    const std::size_t d = dim();
    for (const auto& sub : subsets(gauge_.n, gauge_.k)) {
        const Rational& sv = s.at(sub);
        if (sgn(sv) == 0) continue;
        std::vector<std::vector<SparsePolynomial>> m;
        for (std::size_t r = 0; r < static_cast<std::size_t>(gauge_.k); ++r) {
            std::vector<SparsePolynomial> row;
            for (int j : sub) row.push_back(gauge_.columns[static_cast<std::size_t>(j - 1)][r]);
            m.push_back(std::move(row));
        }
        Minor mi{sv, Rational(sv / scale).get_d(), symbolic_det(m, gauge_.ring), {}, {}, {}, {}};
        if (mi.p.is_zero()) throw DomainError("gauge minor " + s_name(sub) + " vanishes identically");
        if (mi.p.total_degree() == 0) continue;
        mi.cp = compile(mi.p);
        for (std::size_t v = 0; v < d; ++v) {
            mi.dp.push_back(mi.p.derivative(v));
            mi.cdp.push_back(compile(mi.dp.back()));
        }
        mi.cddp.assign(d, {});
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w) mi.cddp[v].push_back(compile(mi.dp[v].derivative(w)));
        minors_.push_back(std::move(mi));
    }
}

std::vector<Rational> ScatteringSystem::gradient(const std::vector<Rational>& u) const {
    if (u.size() != dim()) throw DomainError("wrong number of coordinates");
    std::vector<Rational> g(dim());
    for (const auto& m : minors_) {
        Rational p = m.p.eval(u);
        if (sgn(p) == 0) throw DomainError("point lies on a boundary divisor");
        for (std::size_t v = 0; v < dim(); ++v) g[v] += m.s * m.dp[v].eval(u) / p;
    }
    return g;
}

ComplexVector ScatteringSystem::gradient(const ComplexVector& u) const {
    if (u.size() != dim()) throw DomainError("wrong number of coordinates");
    ComplexVector g(dim(), 0.0);
    for (const auto& m : minors_) {
        Complex p = m.cp.eval(u);
        if (p == Complex(0.0, 0.0)) throw DomainError("point lies on a boundary divisor");
        for (std::size_t v = 0; v < dim(); ++v) g[v] += m.s_scaled * m.cdp[v].eval(u) / p;
    }
    return g;
}

Eigen::MatrixXcd ScatteringSystem::hessian(const ComplexVector& u) const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    std::vector<Complex> dp(dim());
    for (const auto& m : minors_) {
        Complex p = m.cp.eval(u);
        for (std::size_t v = 0; v < dim(); ++v) dp[v] = m.cdp[v].eval(u);
        for (std::size_t v = 0; v < dim(); ++v)
            for (std::size_t w = 0; w < dim(); ++w)
                h(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) +=
                    m.s_scaled * (m.cddp[v][w].eval(u) * p - dp[v] * dp[w]) / (p * p);
    }
    return h;
}

double ScatteringSystem::gradient_scale(const ComplexVector& u) const {
    std::vector<double> sums(dim(), 0.0);
    for (const auto& m : minors_) {
        double p = std::abs(m.cp.eval(u));
        for (std::size_t v = 0; v < dim(); ++v) sums[v] += std::abs(m.s_scaled * m.cdp[v].eval(u)) / p;
    }
    return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double ScatteringSystem::boundary_distance(const ComplexVector& u) const {
    double lo = HUGE_VAL, hi = 0;
    for (const auto& m : minors_) {
        double a = std::abs(m.cp.eval(u));
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return hi > 0 ? lo / std::max(hi, 1.0) : 0;
}

ScatteringProblem ScatteringProblem::make(const MandelstamTensor& s) {
    if (!(s.k == 2 && s.n >= 4) && !(s.k == 3 && s.n == 6))
        throw DomainError("solver supports k = 2 (n >= 4) and (k,n) = (3,6)");
    auto ring = mandelstam_ring(s.k, s.n);
    auto vals = assignment(s, ring);
    for (const auto& f : momentum_forms(s.k, s.n, s.k - 2))
        if (sgn(f.eval(vals)) != 0) throw DomainError("momentum conservation fails: " + f.to_string());
    return ScatteringProblem{s.k, s.n, s};
}

Gauge ScatteringProblem::gauge() const { return k == 2 ? gauge_k2(n) : gauge_36(); }

long ScatteringProblem::expected_count() const {
    if (k == 3) return 26;
    return factorial(static_cast<unsigned>(n - 3)).get_si();
}

unsigned default_threads() {
    if (const char* env = std::getenv("SHV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct StartResult {
    bool ok = false;
    ComplexVector u;
    double residual = 0;
};

/*
 * Converged when |g| is below tol relative to the size of the terms summed
 * in g. Newton on F_i = u_i (u_i - 1) g_i. Every gauge coordinate has boundary
 * divisors at 0 and 1, so F and g share their zeros off the boundary, while
 * F no longer decays when coordinates escape to infinity.
 */
StartResult newton(const ScatteringSystem& sys, ComplexVector u, double tol) {
    StartResult out;
    const auto d = static_cast<Eigen::Index>(sys.dim());
    auto scaled = [&](const ComplexVector& v, ComplexVector& g, Eigen::VectorXcd& f) {
        try {
            g = sys.gradient(v);
        } catch (const DomainError&) {
            return false;
        }
        if (!finite(g)) return false;
        f.resize(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            const Complex& x = v[static_cast<std::size_t>(i)];
            f(i) = x * (x - 1.0) * g[static_cast<std::size_t>(i)];
        }
        return f.allFinite();
    };
    auto relative = [&](const ComplexVector& v, const ComplexVector& g) {
        return inf_norm(g) / std::max(1.0, sys.gradient_scale(v));
    };
    ComplexVector g;
    Eigen::VectorXcd f;
    if (!scaled(u, g, f)) return out;
    double merit = f.norm();
    for (int iter = 0; iter < 100 && relative(u, g) >= tol; ++iter) {
        Eigen::MatrixXcd jac = sys.hessian(u);
        for (Eigen::Index i = 0; i < d; ++i) {
            const Complex& x = u[static_cast<std::size_t>(i)];
            jac.row(i) *= x * (x - 1.0);
            jac(i, i) += (2.0 * x - 1.0) * g[static_cast<std::size_t>(i)];
        }
        Eigen::VectorXcd step = jac.partialPivLu().solve(-f);
        if (!step.allFinite()) return out;
        double alpha = 1;
        bool accepted = false;
        for (int halving = 0; halving <= 30; ++halving, alpha /= 2) {
            ComplexVector trial = u;
            for (Eigen::Index i = 0; i < d; ++i) trial[static_cast<std::size_t>(i)] += alpha * step(i);
            ComplexVector gt;
            Eigen::VectorXcd ft;
            if (!scaled(trial, gt, ft)) continue;
            double mt = ft.norm();
            if (mt < merit || relative(trial, gt) < tol) {
                u = std::move(trial);
                g = std::move(gt);
                f = std::move(ft);
                merit = mt;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    double norm = relative(u, g);
    if (norm >= tol || inf_norm(u) > 1e8 || sys.boundary_distance(u) < 1e-12) return out;
    out.ok = true;
    out.u = std::move(u);
    out.residual = norm;
    return out;
}

double distance(const ComplexVector& a, const ComplexVector& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Complex gaussian(Rng& rng) {
    double r = std::sqrt(-2.0 * std::log(1.0 - rng.uniform01()));
    return std::polar(r, 2.0 * M_PI * rng.uniform01());
}

// Gauge coordinates of n points in P^{k-1}, given as the columns of m.
ComplexVector gauge_of(const Eigen::MatrixXcd& m) {
    if (m.rows() == 2) {
        auto det = [&](Eigen::Index i, Eigen::Index j) { return m(0, i) * m(1, j) - m(1, i) * m(0, j); };
        const Eigen::Index n = m.cols();
        ComplexVector u;
        for (Eigen::Index i = 2; i + 1 < n; ++i)
            u.push_back(det(i, 0) * det(1, n - 1) / (det(i, n - 1) * det(1, 0)));
        return u;
    }
    Eigen::MatrixXcd a = m.leftCols(3).partialPivLu().solve(m);
    return {a(1, 4) * a(0, 3) / (a(0, 4) * a(1, 3)), a(1, 5) * a(0, 3) / (a(0, 5) * a(1, 3)),
            a(2, 4) * a(0, 3) / (a(0, 4) * a(2, 3)), a(2, 5) * a(0, 3) / (a(0, 5) * a(2, 3))};
}

// Columns of the configuration with gauge coordinates u.
Eigen::MatrixXcd config_of(int k, int n, const ComplexVector& u) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, n);
    if (k == 2) {
        m(1, 0) = 1;
        m(0, 1) = m(1, 1) = 1;
        for (int i = 2; i + 1 < n; ++i) {
            m(0, i) = u[static_cast<std::size_t>(i - 2)];
            m(1, i) = 1;
        }
        m(0, n - 1) = 1;
        return m;
    }
    m(0, 0) = m(1, 1) = m(2, 2) = 1;
    m.col(3).setOnes();
    m(0, 4) = 1;
    m(1, 4) = u[0];
    m(2, 4) = u[2];
    m(0, 5) = 1;
    m(1, 5) = u[1];
    m(2, 5) = u[3];
    return m;
}

ComplexVector random_configuration(int k, int n, Rng& rng) {
    Eigen::MatrixXcd m(k, n);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gaussian(rng);
    return gauge_of(m);
}

// s relabelled so that chart particle j is particle perm[j].
MandelstamTensor relabel(const MandelstamTensor& s, const std::vector<int>& perm) {
    MandelstamTensor out{s.k, s.n, {}};
    for (const auto& [subset, value] : s.values) {
        (void)value;
        Subset image;
        for (int j : subset) image.push_back(perm[static_cast<std::size_t>(j - 1)] + 1);
        std::sort(image.begin(), image.end());
        out.values[subset] = s.at(image);
    }
    return out;
}

bool canonical_less(const ComplexVector& a, const ComplexVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

}  // namespace

SolveResult solve(const ScatteringProblem& problem, const SolveOptions& options) {
    ScatteringSystem sys(problem.s, problem.gauge());
    SolveResult result;
    result.expected = problem.expected_count();
    const std::size_t budget = options.budget ? options.budget : static_cast<std::size_t>(200 * result.expected);
    result.starts = budget;
    std::vector<StartResult> runs(budget);
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads ? options.threads : default_threads(),
                                                             static_cast<unsigned>(budget)));
    // Chart 0 is the standard gauge; the others relabel the particles at random.
    const std::size_t chart_count = 8;
    std::vector<std::vector<int>> perms;
    std::vector<ScatteringSystem> charts;
    Rng chart_rng(mix_seed(options.seed, ~std::uint64_t{0}));
    for (std::size_t c = 0; c < chart_count; ++c) {
        std::vector<int> perm(static_cast<std::size_t>(problem.n));
        std::iota(perm.begin(), perm.end(), 0);
        if (c > 0)
            for (std::size_t j = perm.size() - 1; j > 0; --j)
                std::swap(perm[j], perm[static_cast<std::size_t>(chart_rng.uniform(0, static_cast<long>(j)))]);
        charts.emplace_back(relabel(problem.s, perm), problem.gauge());
        perms.push_back(std::move(perm));
    }
    auto work = [&](unsigned t) {
        for (std::size_t i = t; i < budget; i += threads) {
            Rng rng(mix_seed(options.seed, i));
            const std::size_t c = i % chart_count;
            StartResult r = newton(charts[c], random_configuration(problem.k, problem.n, rng), options.tol);
            if (c > 0 && r.ok) {
                Eigen::MatrixXcd local = config_of(problem.k, problem.n, r.u);
                Eigen::MatrixXcd global(local.rows(), local.cols());
                for (std::size_t j = 0; j < perms[c].size(); ++j)
                    global.col(perms[c][j]) = local.col(static_cast<Eigen::Index>(j));
                r = newton(sys, gauge_of(global), options.tol);
            }
            runs[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < budget; ++i)
        if (runs[i].ok) order.push_back(i);
    result.converged = order.size();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return canonical_less(runs[a].u, runs[b].u); });
    struct Cluster {
        std::size_t rep;
        std::size_t first_seen;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i : order) {
        const auto& u = runs[i].u;
        bool merged = false;
        for (auto& c : clusters) {
            const auto& v = runs[c.rep].u;
            if (distance(u, v) <= options.dedup * std::max(1.0, inf_norm(v))) {
                c.first_seen = std::min(c.first_seen, i);
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({i, i});
    }
    for (const auto& c : clusters) {
        ScatteringSolution sol;
        sol.coordinates = runs[c.rep].u;
        sol.residual_norm = runs[c.rep].residual;
        for (const auto& o : clusters) {
            if (o.rep == c.rep) continue;
            if (distance(sol.coordinates, runs[o.rep].u) <= 1e-3 * std::max(1.0, inf_norm(sol.coordinates)))
                sol.multiplicity_flag = true;
        }
        if (4 * c.first_seen >= 3 * budget) result.partial = true;
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

BigInt eulerian(int m, int j) {
    if (m < 1 || j < 0 || j > m - 1) throw DomainError("eulerian needs m >= 1 and 0 <= j <= m-1");
    std::vector<BigInt> row = {1, 1};
    if (m == 1) return 1;
    for (int q = 3; q <= m; ++q) {
        std::vector<BigInt> next(static_cast<std::size_t>(q), 0);
        for (int i = 0; i < q; ++i) {
            BigInt v = 0;
            if (i < q - 1) v += BigInt(i + 1) * row[static_cast<std::size_t>(i)];
            if (i > 0) v += BigInt(q - i) * row[static_cast<std::size_t>(i - 1)];
            next[static_cast<std::size_t>(i)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

SectorPoint sector_construct_k2(int l, const RationalMatrix& tau, const RationalMatrix& tau_tilde,
                                const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (l < 2 || l > n - 2) throw DomainError("sector index must lie in [2, n-2]");
    if (tau.rows() != 2 || tau.cols() != static_cast<std::size_t>(l)) throw DomainError("tau must be 2 x l");
    if (tau_tilde.rows() != 2 || tau_tilde.cols() != static_cast<std::size_t>(n - l))
        throw DomainError("tau_tilde must be 2 x (n-l)");
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw DomainError("points must be distinct");
    auto horner = [](const RationalMatrix& c, std::size_t row, const Rational& t) {
        Rational v = 0;
        for (std::size_t a = c.cols(); a-- > 0;) v = v * t + c(row, a);
        return v;
    };
    RationalMatrix lambda(2, x.size()), lambda_tilde(2, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rational prod = 1;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) prod *= x[i] - x[j];
        for (std::size_t r = 0; r < 2; ++r) {
            lambda(r, i) = horner(tau, r, x[i]);
            lambda_tilde(r, i) = horner(tau_tilde, r, x[i]) / prod;
        }
    }
    if (lambda.rank() != 2 || lambda_tilde.rank() != 2) throw DomainError("sector construction dropped rank");
    return SectorPoint{KinematicPoint::from_matrices(lambda, lambda_tilde), x};
}

namespace {

// Resultant of the two rows of c as binary forms of degree cols - 1.
Rational binary_resultant(const RationalMatrix& c) {
    const std::size_t d = c.cols() - 1;
    if (d == 0) return 1;
    RationalMatrix sylvester(2 * d, 2 * d);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t shift = 0; shift < d; ++shift)
            for (std::size_t a = 0; a <= d; ++a) sylvester(r * d + shift, shift + a) = c(r, a);
    return sylvester.det();
}

}  // namespace

SectorPoint sector_sample_k2(int n, int l, std::uint64_t seed) {
    if (l < 2 || l > n - 2) throw DomainError("sector index must lie in [2, n-2]");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        std::vector<Rational> x;
        while (x.size() < static_cast<std::size_t>(n)) {
            Rational v = rng.small_rational();
            if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
        }
        RationalMatrix tau(2, static_cast<std::size_t>(l)), tt(2, static_cast<std::size_t>(n - l));
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t a = 0; a < tau.cols(); ++a) tau(r, a) = rng.small_rational();
            for (std::size_t a = 0; a < tt.cols(); ++a) tt(r, a) = rng.small_rational();
        }
        if (sgn(binary_resultant(tau)) == 0 || sgn(binary_resultant(tt)) == 0) continue;
        try {
            auto sp = sector_construct_k2(l, tau, tt, x);
            bool generic = true;
            for (const auto& [sub, v] : sp.point.angles)
                if (sgn(v) == 0 || sgn(sp.point.squares.at(sub)) == 0) generic = false;
            if (generic) return sp;
        } catch (const DomainError&) {
        }
    }
    throw DomainError("sector_sample_k2: 100 degenerate draws in a row");
}

std::vector<Rational> to_gauge_k2(const std::vector<Rational>& x) {
    if (x.size() < 4) throw DomainError("need n >= 4 points");
    const Rational &a = x.front(), &b = x[1], &c = x.back();
    std::vector<Rational> out;
    for (std::size_t i = 2; i + 1 < x.size(); ++i) {
        Rational den = (x[i] - c) * (b - a);
        if (sgn(den) == 0) throw DomainError("points must be distinct");
        out.push_back((x[i] - a) * (b - c) / den);
    }
    return out;
}

namespace {

// Is there a nonzero pair of binary forms f of degree d-1 with column i of m parallel to f(point_i)?
bool parallel_test(const std::vector<std::array<Complex, 2>>& pts, const RationalMatrix& m, int d, double tol) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    if (2 * d > n) return true;
    Eigen::MatrixXcd a(n, 2 * d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [u, v] = pts[static_cast<std::size_t>(i)];
        Complex m0 = m(0, static_cast<std::size_t>(i)).get_d(), m1 = m(1, static_cast<std::size_t>(i)).get_d();
        for (int e = 0; e < d; ++e) {
            Complex mono = std::pow(u, e) * std::pow(v, d - 1 - e);
            a(i, e) = m1 * mono;
            a(i, d + e) = -m0 * mono;
        }
        double norm = a.row(i).norm();
        if (norm > 0) a.row(i) /= norm;
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        double norm = a.col(j).norm();
        if (norm > 0) a.col(j) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) <= tol * sv(0);
}

}  // namespace

SectorClassification sector_classify_k2(const std::vector<std::array<Complex, 2>>& points,
                                        const KinematicPoint& point, double tol, std::uint64_t seed) {
    if (point.k != 2 || static_cast<std::size_t>(point.n) != points.size())
        throw DomainError("classification needs a k=2 point with one moduli point per particle");
    const int n = point.n;
    Rng rng(seed);
    Complex a, b, c, d;
    do {
        auto draw = [&] { return Complex(rng.uniform01() * 2 - 1, rng.uniform01() * 2 - 1); };
        a = draw(), b = draw(), c = draw(), d = draw();
    } while (std::abs(a * d - b * c) < 0.1);
    std::vector<std::array<Complex, 2>> moved;
    for (const auto& [u, v] : points) {
        Complex nu = a * u + b * v, nv = c * u + d * v;
        double s = std::max(std::abs(nu), std::abs(nv));
        moved.push_back({nu / s, nv / s});
    }
    SectorClassification out;
    for (int l = 1; l <= n && !out.minimal_v; ++l)
        if (parallel_test(moved, point.lambda, l, tol)) out.minimal_v = l;
    for (int m = 1; m <= n && !out.minimal_w; ++m)
        if (parallel_test(moved, point.lambda_tilde, m, tol)) out.minimal_w = m;
    if (2 * out.minimal_v <= n) out.candidates.push_back(out.minimal_v);
    if (2 * out.minimal_w <= n && std::find(out.candidates.begin(), out.candidates.end(), n - out.minimal_w) ==
                                      out.candidates.end())
        out.candidates.push_back(n - out.minimal_w);
    std::sort(out.candidates.begin(), out.candidates.end());
    if (out.candidates.size() == 1 && out.candidates[0] >= 2 && out.candidates[0] <= n - 2)
        out.sector = out.candidates[0];
    else if (out.candidates.empty())
        out.message = "no sector passes the rank tests";
    else
        out.message = "ambiguous: " + std::to_string(out.candidates.size()) + " sectors pass the rank tests";
    return out;
}

SectorClassification sector_classify_k2(const ScatteringSolution& solution, const KinematicPoint& point,
                                        double tol, std::uint64_t seed) {
    if (solution.coordinates.size() + 3 != static_cast<std::size_t>(point.n))
        throw DomainError("solution does not match the k=2 gauge");
    std::vector<std::array<Complex, 2>> pts = {{Complex(0), Complex(1)}, {Complex(1), Complex(1)}};
    for (const auto& x : solution.coordinates) pts.push_back({x, Complex(1)});
    pts.push_back({Complex(1), Complex(0)});
    return sector_classify_k2(pts, point, tol, seed);
}

Point36 gauge_coordinates_36(const RationalMatrix& config) {
    if (config.rows() != 3 || config.cols() != 6) throw DomainError("need a 3 x 6 configuration");
    auto [r, pivots] = config.rref();
    if (pivots.size() < 3 || pivots[0] != 0 || pivots[1] != 1 || pivots[2] != 2)
        throw DomainError("first three columns are dependent");
    for (std::size_t i = 0; i < 3; ++i)
        if (sgn(r(i, 3)) == 0) throw DomainError("fourth column is not in general position");
    RationalMatrix m(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = r(i, j) / r(i, 3);
    if (sgn(m(0, 4)) == 0 || sgn(m(0, 5)) == 0) throw DomainError("columns 5 or 6 cannot be normalized");
    return {m(1, 4) / m(0, 4), m(1, 5) / m(0, 5), m(2, 4) / m(0, 4), m(2, 5) / m(0, 5)};
}

std::array<Point36, 4> tautological_solutions_36(const KinematicPoint& point) {
    if (point.k != 3 || point.n != 6) throw DomainError("tautological solutions need k = 3, n = 6");
    RationalMatrix pairing = point.lambda * point.lambda_tilde.transpose();
    if (pairing.rank() != 1) throw DomainError("point is not generic on SH(3,6,1)");
    RationalMatrix v_cap = pairing.transpose().nullspace() * point.lambda;
    RationalMatrix w_cap = pairing.nullspace() * point.lambda_tilde;
    auto veronese = [](const RationalMatrix& m) {
        RationalMatrix out(3, m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(0, j) = m(0, j) * m(0, j);
            out(1, j) = m(0, j) * m(1, j);
            out(2, j) = m(1, j) * m(1, j);
        }
        return out;
    };
    return {gauge_coordinates_36(point.lambda), gauge_coordinates_36(point.lambda_tilde),
            gauge_coordinates_36(veronese(v_cap)), gauge_coordinates_36(veronese(w_cap))};
}

}  // namespace shv
