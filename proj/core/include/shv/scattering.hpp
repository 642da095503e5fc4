#ifndef SHV_SCATTERING_HPP
#define SHV_SCATTERING_HPP

#include "shv/mandelstam.hpp"
#include "shv/univariate.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shv {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// sum_j s_ij / (x_i - x_j) for i = 1..n.
std::vector<Rational> residuals_k2(const MandelstamTensor& s, const std::vector<Rational>& x);
ComplexVector residuals_k2(const MandelstamTensor& s, const ComplexVector& x);

// Numerator of sum s_ij / ((z - x_i)(z - x_j)) over the common denominator.
UniPoly t_numerator(const MandelstamTensor& s, const std::vector<Rational>& x);
bool t_function_check(const MandelstamTensor& s, const std::vector<Rational>& x);

// Coordinates (x, y, z, w); the residuals come out as the partials in w, x, y, z.
using Point36 = std::array<Rational, 4>;
std::array<Rational, 4> residuals_36(const MandelstamTensor& s, const Point36& p);
std::array<Complex, 4> residuals_36(const MandelstamTensor& s, const std::array<Complex, 4>& p);

// A k x n matrix of polynomials in the unfixed moduli coordinates.
struct Gauge {
    int k = 0;
    int n = 0;
    RingPtr ring;
    std::vector<std::vector<SparsePolynomial>> columns;  // columns[j] has k entries
};
// (x_1, x_2, x_n) = (0, 1, infinity); unknowns x[3] .. x[n-1].
Gauge gauge_k2(int n);
// Columns e1, e2, e3, (1,1,1), (1,x,z), (1,y,w); unknowns x, y, z, w.
Gauge gauge_36();

// Critical-point equations of sum_I s_I log p_I on a gauge chart.
class ScatteringSystem {
public:
    ScatteringSystem(const MandelstamTensor& s, Gauge gauge);

    std::size_t dim() const { return gauge_.ring->size(); }
    const Gauge& gauge() const { return gauge_; }

    std::vector<Rational> gradient(const std::vector<Rational>& u) const;
    // Numeric mode uses s scaled to max |s_I| = 1.
    ComplexVector gradient(const ComplexVector& u) const;
    Eigen::MatrixXcd hessian(const ComplexVector& u) const;
    // max_i sum_I |s_I d_i p_I / p_I|, the size of the terms that cancel in the gradient.
    double gradient_scale(const ComplexVector& u) const;
    // Smallest |p_I| relative to the largest, at u.
    double boundary_distance(const ComplexVector& u) const;

private:
    struct Term {
        double coeff;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };
    struct Compiled {
        std::vector<Term> terms;
        Complex eval(const ComplexVector& u) const;
    };
    struct Minor {
        Rational s;
        double s_scaled = 0;
        SparsePolynomial p;
        std::vector<SparsePolynomial> dp;
        Compiled cp;
        std::vector<Compiled> cdp;
        std::vector<std::vector<Compiled>> cddp;
    };
    static Compiled compile(const SparsePolynomial& p);

    Gauge gauge_;
    std::vector<Minor> minors_;
};

struct ScatteringProblem {
    int k = 0;
    int n = 0;
    MandelstamTensor s;

    // Validates the momentum forms of M(k,n,k-2) exactly; supports k = 2 and (3,6).
    static ScatteringProblem make(const MandelstamTensor& s);
    Gauge gauge() const;
    long expected_count() const;  // (n-3)! for k=2, 26 for (3,6)
};

struct ScatteringSolution {
    ComplexVector coordinates;  // unfixed gauge coordinates
    double residual_norm = 0;  // max-norm of the gradient relative to its largest term sum
    std::optional<int> sector;
    bool multiplicity_flag = false;  // another solution lies just outside the dedup radius
};

struct SolveOptions {
    std::size_t budget = 0;  // Newton starts; 0 means 200 x expected count
    std::uint64_t seed = 0;
    double tol = 1e-11;
    double dedup = 1e-6;
    unsigned threads = 0;  // 0 means default_threads()
};

struct SolveResult {
    std::vector<ScatteringSolution> solutions;
    std::size_t starts = 0;
    std::size_t converged = 0;
    long expected = 0;
    bool partial = false;  // new solutions still appeared in the last quarter of starts
};

// SHV_THREADS if set, else the hardware concurrency.
unsigned default_threads();

SolveResult solve(const ScatteringProblem& problem, const SolveOptions& options = {});

// A(m, j) from A(2,0) = A(2,1) = 1 and the standard recursion; A(1,0) = 1.
BigInt eulerian(int m, int j);

struct SectorPoint {
    KinematicPoint point;
    std::vector<Rational> x;  // n finite, distinct points
};

// tau is 2 x l (coefficients of 1..z^{l-1}), tau_tilde is 2 x (n-l).
SectorPoint sector_construct_k2(int l, const RationalMatrix& tau, const RationalMatrix& tau_tilde,
                                const std::vector<Rational>& x);
SectorPoint sector_sample_k2(int n, int l, std::uint64_t seed);

// Moebius image of finite points with x_1, x_2, x_n sent to 0, 1, infinity; returns x_3..x_{n-1}.
std::vector<Rational> to_gauge_k2(const std::vector<Rational>& x);

struct SectorClassification {
    std::optional<int> sector;
    int minimal_v = 0;  // smallest l whose V-test passes
    int minimal_w = 0;  // smallest m whose W-test passes
    std::vector<int> candidates;
    std::string message;  // reason when sector is empty
};

// Points in homogeneous coordinates (u_i : v_i).
SectorClassification sector_classify_k2(const std::vector<std::array<Complex, 2>>& points,
                                        const KinematicPoint& point, double tol = 1e-8,
                                        std::uint64_t seed = 0);
// A solution in the (0, 1, infinity) gauge.
SectorClassification sector_classify_k2(const ScatteringSolution& solution, const KinematicPoint& point,
                                        double tol = 1e-8, std::uint64_t seed = 0);

// V, W, nu(V cap W-perp), nu(V-perp cap W) in the gauge of gauge_36().
std::array<Point36, 4> tautological_solutions_36(const KinematicPoint& point);
// Gauge coordinates of a 3 x 6 configuration.
Point36 gauge_coordinates_36(const RationalMatrix& config);

}  // namespace shv

#endif
