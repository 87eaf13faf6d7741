#include "actsets/rational.hpp"

#include <cctype>

#include "actsets/errors.hpp"

namespace actsets {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty rational literal");
    s = s.substr(b, e - b + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("bad rational literal: '" + text + "'");

    Rational value;
    if (size_t slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational literal: '" + text + "'");
        Rational d{boost::multiprecision::mpz_int(den)};
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(boost::multiprecision::mpz_int(num)) / d;
    } else if (size_t point = s.find('.'); point != std::string::npos) {
        std::string whole = s.substr(0, point);
        std::string frac = s.substr(point + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !all_digits(whole) || !all_digits(frac))
            throw ParseError("bad rational literal: '" + text + "'");
        Rational scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(boost::multiprecision::mpz_int(whole)) +
                Rational(boost::multiprecision::mpz_int(frac)) / scale;
    } else {
        if (!all_digits(s)) throw ParseError("bad rational literal: '" + text + "'");
        value = Rational(boost::multiprecision::mpz_int(s));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1)
        return boost::multiprecision::numerator(value).str();
    return value.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace actsets
