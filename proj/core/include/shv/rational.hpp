#ifndef SHV_RATIONAL_HPP
#define SHV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shv {

using BigInt = mpz_class;
using Rational = mpq_class;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Reduced on construction, so values compare structurally.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", with optional sign. Throws DomainError otherwise.
Rational parse_rational(const std::string& text);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

// Sign of the permutation sorting seq ascending; 0 on a repeated entry.
int sort_sign(const std::vector<int>& seq);

// All size-k subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);

// Ascending complement of s inside {1..n}.
std::vector<int> complement(const std::vector<int>& s, int n);

// SplitMix64 stream; deterministic across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    double uniform01();
    // Numerator in [-50,50], denominator in [1,10].
    Rational small_rational();
    Rational nonzero_rational();

private:
    std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace shv

#endif
