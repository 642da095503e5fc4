#ifndef SHV_BRACKET_HPP
#define SHV_BRACKET_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace shv {

enum class BracketKind { Angle, Square };

// Plücker symbol with strictly increasing 1-based indices.
struct Bracket {
    BracketKind kind = BracketKind::Angle;
    std::vector<int> indices;

    int sum() const;
    auto operator<=>(const Bracket&) const = default;
};

inline Bracket angle(std::vector<int> idx) { return {BracketKind::Angle, std::move(idx)}; }
inline Bracket square(std::vector<int> idx) { return {BracketKind::Square, std::move(idx)}; }

struct NormalizedBracket {
    Bracket bracket;  // indices sorted; meaningless when sign == 0
    int sign = 0;
};

// Sorts raw indices and reports the parity; sign 0 on a repeat.
NormalizedBracket normalize_bracket(BracketKind kind, const std::vector<int>& raw, int n);

// "<1 2 3>" or "[1 2 3]"
std::string to_string(const Bracket& b);
Bracket parse_bracket(const std::string& text);

}  // namespace shv

#endif
