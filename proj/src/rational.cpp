#include "toralpha/rational.hpp"

#include <algorithm>

namespace toralpha {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

std::string format_rational(const Rat& r) { return r.str(); }

Int parse_integer(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed integer '" + s + "'");
    }
}

std::vector<RatVector> sorted_unique(std::vector<RatVector> points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end(), exact_eq), points.end());
    return points;
}

}  // namespace toralpha
