#include "shv/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace shv {

RingPtr Ring::make(std::vector<std::string> names) {
    auto r = std::make_shared<Ring>();
    r->names_ = std::move(names);
    for (std::size_t i = 0; i < r->names_.size(); ++i) {
        if (!r->index_.emplace(r->names_[i], i).second)
            throw DomainError("duplicate variable name: " + r->names_[i]);
    }
    return r;
}

std::size_t Ring::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unknown variable: " + name);
    return it->second;
}

unsigned degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

SparsePolynomial::SparsePolynomial(RingPtr ring) : ring_(std::move(ring)) {}

SparsePolynomial SparsePolynomial::constant(RingPtr ring, const Rational& c) {
    SparsePolynomial p(ring);
    p.add_term(Monomial(ring->size(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(RingPtr ring, std::size_t i) {
    Monomial m(ring->size(), 0);
    m.at(i) = 1;
    return monomial(ring, m, 1);
}

SparsePolynomial SparsePolynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    SparsePolynomial p(ring);
    p.add_term(m, c);
    return p;
}

unsigned SparsePolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
    return d;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != ring_->size()) throw DomainError("exponent vector length differs from ring size");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void SparsePolynomial::check_ring(const SparsePolynomial& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->names() == o.ring_->names()))
        throw DomainError("polynomials over different rings");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial p = *this;
    p += o;
    return p;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial p = *this;
    p -= o;
    return p;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    check_ring(o);
    SparsePolynomial p(ring_);
    Monomial m(ring_->size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            p.add_term(m, ca * cb);
        }
    return p;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
    SparsePolynomial p(ring_);
    if (sgn(c) == 0) return p;
    for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
    return p;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

std::pair<Monomial, Rational> SparsePolynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grevlex_compare(it->first, best->first) > 0) best = it;
    return *best;
}

std::vector<std::pair<Monomial, Rational>> SparsePolynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return grevlex_compare(a.first, b.first) > 0; });
    return v;
}

Rational SparsePolynomial::eval(const std::vector<Rational>& values) const {
    if (values.size() != ring_->size()) throw DomainError("assignment does not cover all variables");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
        total += t;
    }
    return total;
}

Rational SparsePolynomial::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> values(ring_->size());
    std::vector<bool> used(ring_->size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) used[i] = true;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        auto it = assignment.find(ring_->name(i));
        if (it != assignment.end()) values[i] = it->second;
        else if (used[i]) throw DomainError("no value for variable " + ring_->name(i));
    }
    return eval(values);
}

std::complex<double> SparsePolynomial::eval(const std::vector<std::complex<double>>& values) const {
    if (values.size() != ring_->size()) throw DomainError("assignment does not cover all variables");
    std::complex<double> total = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.get_d();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
        total += t;
    }
    return total;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
    SparsePolynomial p(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        p.add_term(d, c * static_cast<long>(m[var]));
    }
    return p;
}

SparsePolynomial SparsePolynomial::compose(const std::vector<SparsePolynomial>& images, RingPtr target) const {
    if (images.size() != ring_->size()) throw DomainError("compose needs one image per variable");
    SparsePolynomial out(target);
    for (const auto& [m, c] : terms_) {
        SparsePolynomial t = constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * images[i];
        out += t;
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        Rational a = abs(c);
        if (first) s += sgn(c) < 0 ? "-" : "";
        else s += sgn(c) < 0 ? " - " : " + ";
        first = false;
        bool is_const = degree(m) == 0;
        if (is_const) s += shv::to_string(a);
        else {
            if (a != 1) s += shv::to_string(a) + "*";
            s += monomial_to_string(m, *ring_);
        }
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::string& t, RingPtr r) : text_(t), ring_(std::move(r)) {}

    SparsePolynomial parse() {
        SparsePolynomial out(ring_);
        skip();
        if (pos_ == text_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            skip();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip();
            out += term() * Rational(sign);
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }

    SparsePolynomial term() {
        Rational coef = 1;
        Monomial m(ring_->size(), 0);
        bool any = false;
        while (true) {
            skip();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
                coef *= parse_rational(text_.substr(start, pos_ - start));
            } else {
                std::string name = variable_name();
                unsigned e = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    std::size_t start = pos_;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (start == pos_) fail("missing exponent");
                    e = static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
                }
                m[ring_->index(name)] += static_cast<std::uint16_t>(e);
            }
            any = true;
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) fail("empty term");
        return SparsePolynomial::monomial(ring_, m, coef);
    }

    std::string variable_name() {
        std::size_t start = pos_;
        char c = peek();
        if (c == '<' || c == '[') {
            char close = c == '<' ? '>' : ']';
            while (pos_ < text_.size() && text_[pos_] != close) ++pos_;
            if (pos_ == text_.size()) fail("unterminated bracket");
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            if (peek() == '[') {
                while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
                if (pos_ == text_.size()) fail("unterminated index list");
                ++pos_;
            }
        } else {
            fail("expected a variable or coefficient");
        }
        return text_.substr(start, pos_ - start);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, RingPtr ring) {
    return Parser(text, std::move(ring)).parse();
}

}  // namespace shv
