#ifndef SHV_POSET_HPP
#define SHV_POSET_HPP

#include "shv/bracket.hpp"
#include "shv/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace shv {

enum class Relation { Less, Greater, Equal, Incomparable };

struct Cover {
    Bracket square;
    Bracket angle;
};

struct IncomparablePairs {
    std::vector<std::pair<Bracket, Bracket>> angle_angle;
    std::vector<std::pair<Bracket, Bracket>> square_square;
    std::vector<std::pair<Bracket, Bracket>> mixed;  // (angle, square)
    std::size_t total() const { return angle_angle.size() + square_square.size() + mixed.size(); }
};

struct BidegreePolynomial {
    std::map<std::pair<unsigned, unsigned>, BigInt> terms;  // (s, t) exponents
    BigInt coefficient_sum() const;
};

/*
 * Young's lattice Y(k,n) on angle brackets, its reversed copy on square
 * brackets, and the covering relations gluing the top of the copy to the
 * bottom of Y. Comparability is computed on demand; chain counts are
 * tabulated once in the constructor.
 */
class GluedPoset {
public:
    GluedPoset(int k, int n, int r);

    int k() const { return k_; }
    int n() const { return n_; }
    int r() const { return r_; }

    // All angle brackets then all square brackets, lexicographic within each.
    std::vector<Bracket> elements() const;

    Relation compare(const Bracket& a, const Bracket& b) const;
    bool leq(const Bracket& a, const Bracket& b) const;

    std::vector<Cover> covering_relations() const;
    // Upper covers of b inside P(k,n,r).
    std::vector<Bracket> upper_covers(const Bracket& b) const;

    IncomparablePairs incomparable_pairs() const;

    // Maximal chains from b to the top of its copy of Young's lattice.
    const BigInt& chain_count(const Bracket& b) const;

    BidegreePolynomial bidegree() const;

    // Maximal chains of the whole glued poset, by a DP over upper covers.
    BigInt count_maximal_chains() const;

    // Squares by decreasing index sum, then angles by increasing sum; ties lexicographic.
    std::vector<Bracket> linear_extension() const;

    // Column-sorted skew tableau of an incomparable (angle, square) pair.
    std::pair<Bracket, Bracket> meet_join(const Bracket& a, const Bracket& b) const;

private:
    void check(const Bracket& b) const;
    bool angle_leq(const std::vector<int>& a, const std::vector<int>& b) const;
    bool square_below_angle(const std::vector<int>& sq, const std::vector<int>& ang) const;

    int k_, n_, r_;
    std::map<std::vector<int>, BigInt> chains_;
};

BigInt hook_content_count(int k, int n);

// Squares by decreasing index sum, then angles by increasing sum; ties lexicographic.
std::vector<Bracket> canonical_linear_extension(int k, int n);

// Incremented-single-index covers of a k-subset inside Y(k,n).
std::vector<std::vector<int>> young_upper_covers(const std::vector<int>& s, int n);

}  // namespace shv

#endif
