#ifndef SHV_MANDELSTAM_HPP
#define SHV_MANDELSTAM_HPP

#include "shv/matrix.hpp"
#include "shv/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shv {

using Subset = std::vector<int>;  // strictly increasing, 1-based

struct KinematicPoint {
    int k = 0;
    int n = 0;
    RationalMatrix lambda;
    RationalMatrix lambda_tilde;
    std::map<Subset, Rational> angles;
    std::map<Subset, Rational> squares;
    // Set when the point came from an (n-k+r) x n parameter matrix.
    std::optional<RationalMatrix> parameters;
    int r = -1;

    static KinematicPoint from_matrices(const RationalMatrix& lambda, const RationalMatrix& lambda_tilde);
    std::size_t pairing_rank() const;  // rank of lambda * lambda_tilde^T
};

/*
 * lambda = rows 1..k of x; lambda_tilde spans the kernel of rows r+1..n-k+r,
 * scaled so that its minors are exactly the twisted complementary minors.
 */
KinematicPoint kinematics_from_parameters(int k, int n, int r, const RationalMatrix& x);

struct MandelstamTensor {
    int k = 0;
    int n = 0;
    std::map<Subset, Rational> values;

    const Rational& at(const Subset& s) const;
    bool operator==(const MandelstamTensor& o) const { return k == o.k && n == o.n && values == o.values; }
};

MandelstamTensor hadamard(const KinematicPoint& p);

// Ring on s[...] variables, lexicographic in the subsets.
RingPtr mandelstam_ring(int k, int n);
std::string s_name(const Subset& s);
std::vector<Rational> assignment(const MandelstamTensor& s, const RingPtr& ring);

std::vector<SparsePolynomial> momentum_forms(int k, int n, int r);

struct Dims {
    long dim_sh = 0;
    long dim_m = 0;
    long ambient = 0;
};
Dims dims(int k, int n, int r);

RationalMatrix marginal(const MandelstamTensor& s);

struct Membership {
    bool member = true;
    std::string violated;  // first violated polynomial, empty when member
};
Membership membership_k2(const MandelstamTensor& s, int r);

// Redraws (up to 100 times) until every angle and square coordinate is nonzero.
KinematicPoint psi_sample(int k, int n, int r, std::uint64_t seed);
// The structured parameter matrix before it is split into lambda and lambda_tilde.
RationalMatrix psi_parameters(int k, int n, int r, std::uint64_t seed);

KinematicPoint positive_sample(int k, int n, std::uint64_t seed);

// Pair (V cap W-perp, V-perp cap W) for a (3,n,1) parameter matrix, as a k=2 point.
KinematicPoint induced_k2_point(const RationalMatrix& x);

KinematicPoint delete_column(const KinematicPoint& p, int col);

enum class StrictnessSign { Negative, Boundary, Positive };
// s13*s24 + s14*s23 - s12*s34 on a k=2, n=4 tensor.
Rational strictness_value(const MandelstamTensor& s);
StrictnessSign classify_strictness(const MandelstamTensor& s);
bool has_positive_sign_pattern(const MandelstamTensor& s);
MandelstamTensor strictness_witness_point(std::uint64_t seed = 0);

}  // namespace shv

#endif
