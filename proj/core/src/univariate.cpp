#include "shv/univariate.hpp"

#include <algorithm>

namespace shv {

UniPoly::UniPoly(long c) : UniPoly(Rational(c)) {}

UniPoly::UniPoly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, unsigned exponent) {
    UniPoly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(exponent + 1, Rational(0));
    p.c_[exponent] = c;
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

unsigned UniPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<unsigned>(i);
    throw DomainError("valuation of the zero polynomial");
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator/(const UniPoly& o) const {
    if (o.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < o.degree()) throw DomainError("inexact polynomial division");
    std::vector<Rational> rem = c_;
    UniPoly q;
    q.c_.assign(static_cast<std::size_t>(degree() - o.degree() + 1), Rational(0));
    const Rational& lead = o.c_.back();
    for (int i = degree() - o.degree(); i >= 0; --i) {
        Rational f = rem[static_cast<std::size_t>(i + o.degree())] / lead;
        q.c_[static_cast<std::size_t>(i)] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * o.c_[j];
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw DomainError("inexact polynomial division");
    q.trim();
    return q;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].get_str() + ")";
        if (i) s += "*t^" + std::to_string(i);
    }
    return s;
}

}  // namespace shv
