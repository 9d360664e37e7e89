#include "ramsey/rational.hpp"

#include <cassert>

namespace ramsey {

std::string to_fraction_string(const ExactRational& q) {
    const Natural& num = boost::multiprecision::numerator(q);
    const Natural& den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const ExactRational& q, int places) {
    assert(places >= 0);
    Natural num = boost::multiprecision::numerator(q);
    const Natural& den = boost::multiprecision::denominator(q);
    bool negative = num < 0;
    if (negative)
        num = -num;

    Natural scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;

    // round(num * scale / den), half away from zero
    Natural scaled = num * scale;
    Natural rounded = (scaled * 2 + den) / (den * 2);

    Natural whole = rounded / scale;
    Natural frac = rounded % scale;

    std::string digits = frac.str();
    std::string result = negative && rounded != 0 ? "-" : "";
    result += whole.str();
    if (places > 0) {
        result += '.';
        result += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
        result += digits;
    }
    return result;
}

} // namespace ramsey
