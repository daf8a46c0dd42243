#include "lathom/numbers.hpp"

#include <stdexcept>

namespace lathom {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

}  // namespace lathom
