#include "exactgm/rational.hpp"

#include <cctype>

#include "exactgm/error.hpp"

namespace exactgm {

Integer rational_ceil(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);  // canonical: den > 0
    Integer quotient = num / den;  // truncates toward zero
    if (quotient * den < num) {
        quotient += 1;
    }
    return quotient;
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = (s[pos] == '-');
        ++pos;
    }

    auto digits = [&](std::size_t& p) {
        std::string d;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            d.push_back(s[p++]);
        }
        return d;
    };

    std::string int_part = digits(pos);
    Rational value;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den_part = digits(pos);
        if (int_part.empty() || den_part.empty() || pos != s.size()) {
            throw ParseError("malformed rational '" + text + "'");
        }
        Integer den(den_part);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(Integer(int_part), den);
    } else if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::string frac_part = digits(pos);
        if ((int_part.empty() && frac_part.empty()) || pos != s.size()) {
            throw ParseError("malformed rational '" + text + "'");
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        Integer num = Integer(int_part.empty() ? "0" : int_part) * scale +
                      Integer(frac_part.empty() ? "0" : frac_part);
        value = Rational(num, scale);
    } else {
        if (int_part.empty() || pos != s.size()) {
            throw ParseError("malformed rational '" + text + "'");
        }
        value = Rational(Integer(int_part));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += "/" + denominator(q).str();
    }
    return out;
}

Integer isqrt(const Integer& v) {
    if (v < 0) throw Error("isqrt of negative value");
    return sqrt(v);
}

}  // namespace exactgm
