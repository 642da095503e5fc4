#include "shv/rational.hpp"

#include <algorithm>
#include <cctype>

namespace shv {

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const BigInt& z) {
    return z.get_str();
}

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw DomainError("malformed rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    BigInt d(den);
    if (d == 0) throw DomainError("zero denominator: '" + text + "'");
    Rational q{BigInt(num), d};
    q.canonicalize();
    return q;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

int sort_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    return sign;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<int> complement(const std::vector<int>& s, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
    return out;
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

double Rng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rational Rng::small_rational() {
    long p = uniform(-50, 50);
    long q = uniform(1, 10);
    return make_rational(p, q);
}

Rational Rng::nonzero_rational() {
    Rational q;
    do q = small_rational();
    while (q == 0);
    return q;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
    r.next();
    return r.next();
}

}  // namespace shv
