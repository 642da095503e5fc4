#ifndef SHV_POLYNOMIAL_HPP
#define SHV_POLYNOMIAL_HPP

#include "shv/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace shv {

// Interned variable table. Variable 0 is the smallest in every term order.
class Ring {
public:
    static std::shared_ptr<const Ring> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    // Throws DomainError for unknown names.
    std::size_t index(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;
using Monomial = std::vector<std::uint16_t>;

/*
 * Graded reverse lexicographic comparison: higher degree wins; on a tie
 * the monomial with the larger exponent at the smallest differing
 * variable is the smaller one. Returns <0, 0, >0.
 */
int grevlex_compare(const Monomial& a, const Monomial& b);

unsigned degree(const Monomial& m);

class SparsePolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(RingPtr ring);

    static SparsePolynomial constant(RingPtr ring, const Rational& c);
    static SparsePolynomial variable(RingPtr ring, std::size_t i);
    static SparsePolynomial monomial(RingPtr ring, const Monomial& m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    unsigned total_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Rational& c) const;
    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    bool operator==(const SparsePolynomial& o) const;
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

    // Largest term under grevlex; throws on the zero polynomial.
    std::pair<Monomial, Rational> leading_term() const;
    // Terms sorted descending under grevlex.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

    Rational eval(const std::vector<Rational>& values) const;
    Rational eval(const std::map<std::string, Rational>& assignment) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

    SparsePolynomial derivative(std::size_t var) const;

    // Substitutes a polynomial (in a common target ring) for every variable.
    SparsePolynomial compose(const std::vector<SparsePolynomial>& images, RingPtr target) const;

    std::string to_string() const;

private:
    void check_ring(const SparsePolynomial& o) const;

    RingPtr ring_;
    Terms terms_;
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

// Parses the text encoding produced by to_string; variable names must be in ring.
SparsePolynomial parse_polynomial(const std::string& text, RingPtr ring);

}  // namespace shv

#endif
