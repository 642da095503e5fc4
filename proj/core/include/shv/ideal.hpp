#ifndef SHV_IDEAL_HPP
#define SHV_IDEAL_HPP

#include "shv/bracket.hpp"
#include "shv/matrix.hpp"
#include "shv/polynomial.hpp"
#include "shv/poset.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace shv {

// Polynomial ring on all 2*C(n,k) brackets, ordered by the canonical linear extension.
class BracketRing {
public:
    BracketRing(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<Bracket>& order() const { return order_; }
    std::size_t index(const Bracket& b) const;
    const Bracket& bracket(std::size_t var) const { return order_[var]; }

    SparsePolynomial var(const Bracket& b) const;
    // c * normalized bracket, or zero when the raw indices repeat.
    SparsePolynomial signed_var(BracketKind kind, const std::vector<int>& raw, const Rational& c = 1) const;
    Monomial quadratic(const Bracket& a, const Bracket& b) const;
    std::pair<Bracket, Bracket> factors(const Monomial& m) const;

private:
    int k_, n_;
    RingPtr ring_;
    std::vector<Bracket> order_;
    std::map<Bracket, std::size_t> index_;
};

/*
 * Angle brackets go to k x k minors of rows 1..k of an (n-k+r) x n matrix.
 * [J] goes to (-1)^(sum J - k) times the minor on rows r+1..n-k+r and the
 * columns outside J.
 */
class ParametrizationPhi {
public:
    ParametrizationPhi(int k, int n, int r);

    int k() const { return k_; }
    int n() const { return n_; }
    int r() const { return r_; }
    int rows() const { return n_ - k_ + r_; }
    const RingPtr& ring() const { return xring_; }
    std::size_t x_index(int row, int col) const;  // 1-based

    int square_sign(const Bracket& b) const;
    SparsePolynomial image(const Bracket& b) const;
    Rational value(const Bracket& b, const RationalMatrix& x) const;
    // Values of every variable of the bracket ring at x, in ring order.
    std::vector<Rational> values(const BracketRing& ring, const RationalMatrix& x) const;
    Monomial leading_monomial(const Bracket& b) const;

    RationalMatrix random_matrix(std::uint64_t seed) const;

private:
    void check(const Bracket& b) const;
    std::vector<std::size_t> row_range(const Bracket& b) const;
    std::vector<int> column_set(const Bracket& b) const;

    int k_, n_, r_;
    RingPtr xring_;
};

SparsePolynomial plucker_relation(const BracketRing& ring, const std::vector<int>& prefix,
                                  const std::vector<int>& window, BracketKind kind);

// Raw shuffle relation for a same-side incomparable pair (top row a, bottom row b).
SparsePolynomial garnir_relation(const BracketRing& ring, const Bracket& a, const Bracket& b);

SparsePolynomial straightening_generator(const BracketRing& ring, const GluedPoset& poset, const Bracket& a,
                                         const Bracket& s);

struct PQEntry {
    int sign = 0;
    Bracket bracket;
};

struct PQMatrices {
    std::vector<std::vector<int>> row_labels;
    std::vector<std::vector<int>> col_labels;
    std::vector<std::vector<PQEntry>> P;
    std::vector<std::vector<PQEntry>> Q;
};

PQMatrices pq_matrices(int k, int n, int r);
std::vector<SparsePolynomial> pq_product_entries(const BracketRing& ring, int r);

SparsePolynomial toric_binomial(const BracketRing& ring, const GluedPoset& poset, const Bracket& a,
                                const Bracket& s);

struct Generator {
    SparsePolynomial poly;
    std::pair<Bracket, Bracket> pair;  // assigned incomparable pair
    Monomial leading;
};

struct GeneratorSuite {
    int k = 0, n = 0, r = 0;
    std::vector<Generator> plucker_angle;
    std::vector<Generator> plucker_square;
    std::vector<Generator> mixed;
    std::size_t size() const { return plucker_angle.size() + plucker_square.size() + mixed.size(); }
    std::vector<const Generator*> all() const;
};

struct VerificationReport {
    bool ok = true;
    std::size_t samples = 0;
    std::size_t evaluations = 0;
    std::optional<std::string> failure;
};

GeneratorSuite generator_suite(const BracketRing& ring, const GluedPoset& poset);
GeneratorSuite generator_suite(int k, int n, int r);

// Exact evaluation of each polynomial at the phi-values of seeded random matrices.
VerificationReport verify_in_kernel(const BracketRing& ring, const ParametrizationPhi& phi,
                                    const std::vector<SparsePolynomial>& polys, std::size_t samples,
                                    std::uint64_t seed);

// Substitutes symbolic phi-images and expands.
SparsePolynomial phi_pullback(const BracketRing& ring, const ParametrizationPhi& phi, const SparsePolynomial& p);

// Rows indexed by polys, columns by the bilinear (angle, square) monomials.
RationalMatrix bilinear_coefficients(const BracketRing& ring, const std::vector<SparsePolynomial>& polys);

}  // namespace shv

#endif
