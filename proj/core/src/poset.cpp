#include "shv/poset.hpp"

#include <algorithm>

namespace shv {

BigInt BidegreePolynomial::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
}

std::vector<std::vector<int>> young_upper_covers(const std::vector<int>& s, int n) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int limit = i + 1 < s.size() ? s[i + 1] : n + 1;
        if (s[i] + 1 < limit) {
            auto t = s;
            ++t[i];
            out.push_back(std::move(t));
        }
    }
    return out;
}

GluedPoset::GluedPoset(int k, int n, int r) : k_(k), n_(n), r_(r) {
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    if (r < 0 || r > k) throw DomainError("need 0 <= r <= k");
    if (2 * k > r + n) throw DomainError("need 2k <= r + n");
    auto all = subsets(n, k);
    // Reverse lexicographic order visits every upper cover first.
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        BigInt c = 0;
        auto ups = young_upper_covers(*it, n);
        if (ups.empty()) c = 1;
        for (const auto& u : ups) c += chains_.at(u);
        chains_.emplace(*it, c);
    }
}

void GluedPoset::check(const Bracket& b) const {
    if (static_cast<int>(b.indices.size()) != k_ || sort_sign(b.indices) != 1 || b.indices.front() < 1 ||
        b.indices.back() > n_)
        throw DomainError("bracket " + to_string(b) + " does not belong to (k,n) = (" + std::to_string(k_) + "," +
                          std::to_string(n_) + ")");
}

std::vector<Bracket> GluedPoset::elements() const {
    std::vector<Bracket> out;
    for (const auto& s : subsets(n_, k_)) out.push_back(angle(s));
    for (const auto& s : subsets(n_, k_)) out.push_back(square(s));
    return out;
}

bool GluedPoset::angle_leq(const std::vector<int>& a, const std::vector<int>& b) const {
    for (int i = 0; i < k_; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool GluedPoset::square_below_angle(const std::vector<int>& sq, const std::vector<int>& ang) const {
    // Semi-standard skew tableau: complement of sq on top, shifted right by r.
    auto top = complement(sq, n_);
    for (int t = 0; t < k_ - r_; ++t)
        if (top[t] > ang[r_ + t]) return false;
    return true;
}

Relation GluedPoset::compare(const Bracket& a, const Bracket& b) const {
    check(a);
    check(b);
    if (a == b) return Relation::Equal;
    if (a.kind == b.kind) {
        bool le = angle_leq(a.indices, b.indices);
        bool ge = angle_leq(b.indices, a.indices);
        if (a.kind == BracketKind::Square) std::swap(le, ge);
        if (le) return Relation::Less;
        if (ge) return Relation::Greater;
        return Relation::Incomparable;
    }
    if (a.kind == BracketKind::Square)
        return square_below_angle(a.indices, b.indices) ? Relation::Less : Relation::Incomparable;
    return square_below_angle(b.indices, a.indices) ? Relation::Greater : Relation::Incomparable;
}

bool GluedPoset::leq(const Bracket& a, const Bracket& b) const {
    auto rel = compare(a, b);
    return rel == Relation::Less || rel == Relation::Equal;
}

std::vector<Cover> GluedPoset::covering_relations() const {
    std::vector<Cover> out;
    std::vector<int> head;
    for (int i = 1; i <= r_; ++i) head.push_back(i);
    int m = 2 * (k_ - r_);
    for (const auto& part : subsets(m, k_ - r_)) {
        std::vector<int> sq = head, an = head;
        for (int v = 1; v <= m; ++v) {
            bool in = std::find(part.begin(), part.end(), v) != part.end();
            (in ? sq : an).push_back(r_ + v);
        }
        out.push_back({square(sq), angle(an)});
    }
    return out;
}

std::vector<Bracket> GluedPoset::upper_covers(const Bracket& b) const {
    check(b);
    std::vector<Bracket> out;
    if (b.kind == BracketKind::Angle) {
        for (auto& u : young_upper_covers(b.indices, n_)) out.push_back(angle(u));
        return out;
    }
    // In the reversed copy going up means decrementing one index.
    for (int i = 0; i < k_; ++i) {
        int floor = i > 0 ? b.indices[i - 1] : 0;
        if (b.indices[i] - 1 > floor) {
            auto t = b.indices;
            --t[i];
            out.push_back(square(t));
        }
    }
    for (const auto& c : covering_relations())
        if (c.square == b) out.push_back(c.angle);
    return out;
}

IncomparablePairs GluedPoset::incomparable_pairs() const {
    IncomparablePairs out;
    auto all = subsets(n_, k_);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (angle_leq(all[i], all[j]) || angle_leq(all[j], all[i])) continue;
            out.angle_angle.emplace_back(angle(all[i]), angle(all[j]));
            out.square_square.emplace_back(square(all[i]), square(all[j]));
        }
    for (const auto& a : all)
        for (const auto& s : all)
            if (!square_below_angle(s, a)) out.mixed.emplace_back(angle(a), square(s));
    return out;
}

const BigInt& GluedPoset::chain_count(const Bracket& b) const {
    check(b);
    return chains_.at(b.indices);
}

BidegreePolynomial GluedPoset::bidegree() const {
    BidegreePolynomial out;
    long base = binomial(static_cast<unsigned>(n_), static_cast<unsigned>(k_)).get_si() -
                static_cast<long>(k_) * (n_ - k_) - 1;
    int offset = k_ * (k_ + 1) / 2;
    for (const auto& c : covering_relations()) {
        auto s = static_cast<unsigned>(base + c.square.sum() - offset);
        auto t = static_cast<unsigned>(base + c.angle.sum() - offset);
        out.terms[{s, t}] += chains_.at(c.square.indices) * chains_.at(c.angle.indices);
    }
    return out;
}

BigInt GluedPoset::count_maximal_chains() const {
    std::map<Bracket, BigInt> memo;
    std::vector<int> top;
    for (int i = n_ - k_ + 1; i <= n_; ++i) top.push_back(i);
    // Angles first, from the top down, so every upper cover is known.
    auto order = elements();
    std::vector<Bracket> angles(order.begin(), order.begin() + static_cast<long>(order.size() / 2));
    std::vector<Bracket> squares(order.begin() + static_cast<long>(order.size() / 2), order.end());
    std::reverse(angles.begin(), angles.end());
    for (const auto& a : angles) {
        BigInt c = 0;
        auto ups = upper_covers(a);
        if (ups.empty()) c = 1;
        for (const auto& u : ups) c += memo.at(u);
        memo[a] = c;
    }
    // Squares go up by decrementing, so lexicographic order visits covers first.
    for (const auto& s : squares) {
        BigInt c = 0;
        for (const auto& u : upper_covers(s)) c += memo.at(u);
        memo[s] = c;
    }
    return memo.at(square(top));
}

std::vector<Bracket> GluedPoset::linear_extension() const {
    return canonical_linear_extension(k_, n_);
}

std::vector<Bracket> canonical_linear_extension(int k, int n) {
    auto all = subsets(n, k);
    auto total = [](const std::vector<int>& s) {
        int v = 0;
        for (int i : s) v += i;
        return v;
    };
    auto asc = all;
    std::sort(asc.begin(), asc.end(), [&](const auto& a, const auto& b) {
        int sa = total(a), sb = total(b);
        return sa != sb ? sa < sb : a < b;
    });
    auto desc = all;
    std::sort(desc.begin(), desc.end(), [&](const auto& a, const auto& b) {
        int sa = total(a), sb = total(b);
        return sa != sb ? sa > sb : a < b;
    });
    std::vector<Bracket> out;
    for (const auto& s : desc) out.push_back(square(s));
    for (const auto& s : asc) out.push_back(angle(s));
    return out;
}

std::pair<Bracket, Bracket> GluedPoset::meet_join(const Bracket& a, const Bracket& b) const {
    check(a);
    check(b);
    if (a.kind != BracketKind::Angle || b.kind != BracketKind::Square)
        throw DomainError("meet_join expects an angle and a square bracket");
    if (square_below_angle(b.indices, a.indices))
        throw DomainError("meet_join of comparable pair " + to_string(a) + ", " + to_string(b));
    auto top = complement(b.indices, n_);
    auto bottom = a.indices;
    for (int t = 0; t < k_ - r_; ++t)
        if (top[t] > bottom[r_ + t]) std::swap(top[t], bottom[r_ + t]);
    return {angle(bottom), square(complement(top, n_))};
}

BigInt hook_content_count(int k, int n) {
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    BigInt N = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    Rational standard{BigInt((n + 1) * (n - k + 1)), BigInt(k + 1)};
    for (int i = 0; i <= k - 2; ++i) standard *= Rational{BigInt((n - i) * (n - i)), BigInt((k - i) * (k - i))};
    standard.canonicalize();
    Rational total = Rational((N + 1) * N) / 2 - standard;
    if (total.get_den() != 1) throw DomainError("non-integral hook-content count");
    return total.get_num();
}

}  // namespace shv
