#include "shv/bracket.hpp"

#include "shv/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace shv {

int Bracket::sum() const {
    return std::accumulate(indices.begin(), indices.end(), 0);
}

NormalizedBracket normalize_bracket(BracketKind kind, const std::vector<int>& raw, int n) {
    for (int i : raw)
        if (i < 1 || i > n)
            throw DomainError("bracket index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    NormalizedBracket out;
    out.bracket.kind = kind;
    out.bracket.indices = raw;
    std::sort(out.bracket.indices.begin(), out.bracket.indices.end());
    out.sign = sort_sign(raw);
    return out;
}

std::string to_string(const Bracket& b) {
    std::string s(1, b.kind == BracketKind::Angle ? '<' : '[');
    for (std::size_t i = 0; i < b.indices.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(b.indices[i]);
    }
    s += b.kind == BracketKind::Angle ? '>' : ']';
    return s;
}

Bracket parse_bracket(const std::string& text) {
    auto first = text.find_first_not_of(' ');
    auto last = text.find_last_not_of(' ');
    if (first == std::string::npos || last - first < 1) throw DomainError("malformed bracket: '" + text + "'");
    char open = text[first], close = text[last];
    Bracket b;
    if (open == '<' && close == '>') b.kind = BracketKind::Angle;
    else if (open == '[' && close == ']') b.kind = BracketKind::Square;
    else throw DomainError("malformed bracket: '" + text + "'");
    std::istringstream in(text.substr(first + 1, last - first - 1));
    int v;
    while (in >> v) b.indices.push_back(v);
    if (!in.eof() || b.indices.empty()) throw DomainError("malformed bracket: '" + text + "'");
    if (sort_sign(b.indices) != 1) throw DomainError("bracket indices must be strictly increasing: '" + text + "'");
    return b;
}

}  // namespace shv
