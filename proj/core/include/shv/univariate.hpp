#ifndef SHV_UNIVARIATE_HPP
#define SHV_UNIVARIATE_HPP

#include "shv/rational.hpp"

#include <string>
#include <vector>

namespace shv {

// Polynomial in one deformation variable t with exact rational coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long c);  // NOLINT: integer literals act as constants
    UniPoly(const Rational& c);  // NOLINT
    static UniPoly monomial(const Rational& c, unsigned exponent);

    // coeffs[i] multiplies t^i; no trailing zeros.
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Lowest exponent with a nonzero coefficient; throws on zero.
    unsigned valuation() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    // Exact quotient; throws DomainError if o does not divide *this.
    UniPoly operator/(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& t) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

}  // namespace shv

#endif
