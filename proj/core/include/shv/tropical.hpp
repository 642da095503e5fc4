#ifndef SHV_TROPICAL_HPP
#define SHV_TROPICAL_HPP

#include "shv/mandelstam.hpp"
#include "shv/univariate.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shv {

// Min-plus coordinates indexed by k-subsets; defined up to a global shift.
struct TropicalVector {
    int k = 0;
    int n = 0;
    std::map<Subset, Rational> values;

    const Rational& at(const Subset& s) const;
    bool operator==(const TropicalVector& o) const { return k == o.k && n == o.n && values == o.values; }
};

TropicalVector tropical_sum(const TropicalVector& a, const TropicalVector& b);  // entrywise +

// min over bijections of the summed entries; brute force up to size 6, Hungarian beyond.
Rational trop_minor(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);

// Exponent matrix in the parameter shape (n-k+r) x n, integer entries in [0, 6].
RationalMatrix valuation_matrix(int k, int n, int r, std::uint64_t seed);

// Angle and square tropical Plücker vectors of an exponent matrix, using the column rule of phi.
TropicalVector trop_angles(int k, int n, int r, const RationalMatrix& a);
TropicalVector trop_squares(int k, int n, int r, const RationalMatrix& a);
TropicalVector trop_mandelstam(int k, int n, int r, const RationalMatrix& a);
TropicalVector trop_mandelstam_sample(int k, int n, int r, std::uint64_t seed);

// Lowest t-exponent of det(entries); throws when the determinant vanishes identically.
unsigned t_valuation(const std::vector<std::vector<UniPoly>>& entries);

// Entries c_ij t^{a_ij} with a = valuation_matrix(seed) and seeded nonzero c_ij.
std::vector<std::vector<UniPoly>> t_matrix(const RationalMatrix& exponents, std::uint64_t seed);
TropicalVector valuation_sample(int k, int n, int r, std::uint64_t seed);

struct TropCheck {
    bool ok = true;
    std::string failing;  // first failing form, empty when ok
};

struct SignedTerm {
    Subset index;
    int sign = 1;
};
using LinearForm = std::vector<SignedTerm>;

struct TropicalEquation {
    std::vector<Subset> lhs;
    std::vector<Subset> rhs;
};

const std::vector<LinearForm>& m250_forms();
const std::vector<TropicalEquation>& m250_positive_equations();
std::string to_string(const LinearForm& f);
std::string to_string(const TropicalEquation& e);

TropCheck tropical_basis_check_m250(const TropicalVector& v);
TropCheck positive_trop_check_m250(const TropicalVector& v);

// The 5 x 10 coefficient matrix of the k=2, n=5 momentum forms, columns in lex order of pairs.
RationalMatrix momentum_matrix_m250();
std::vector<std::vector<Subset>> circuits_m250();

/*
 * Valuations of s_ij along the positive family on SH(2,n,0) whose
 * W-perp is the Vandermonde matrix at nodes c_i t^{b_i}, b strictly
 * decreasing, so the nodes increase for small t > 0.
 */
std::map<Subset, UniPoly> positive_family_mandelstam(int n, std::uint64_t seed);
TropicalVector positive_family_valuation(int n, std::uint64_t seed);

}  // namespace shv

#endif
