#include "nlosc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace nlosc {

namespace detail {

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits from the absolute value; the minimum value cannot occur
    // here because reduced rationals never reach it.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string out;
    while (u != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace detail

std::string Rational::str() const {
    std::string s = detail::int128_to_string(num_);
    if (den_ != 1) {
        s += "/";
        s += detail::int128_to_string(den_);
    }
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto trim = [](const std::string& in) {
        size_t b = in.find_first_not_of(" \t");
        size_t e = in.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return in.substr(b, e - b + 1);
    };
    auto parse_int = [](const std::string& in) -> Int {
        std::string t = in;
        if (t.empty()) throw ConfigError("empty integer in rational literal");
        size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw ConfigError("sign without digits in rational literal");
        Int v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ConfigError("invalid digit in rational literal: '" + in + "'");
            int d = t[i] - '0';
            if (__builtin_mul_overflow(v, static_cast<Int>(10), &v) ||
                __builtin_add_overflow(v, static_cast<Int>(d), &v))
                throw OverflowError("rational literal too large: '" + in + "'");
        }
        return neg ? -v : v;
    };

    std::string t = trim(text);
    size_t slash = t.find('/');
    if (slash == std::string::npos) return from_int128(parse_int(t), 1);
    Int n = parse_int(trim(t.substr(0, slash)));
    Int d = parse_int(trim(t.substr(slash + 1)));
    if (d == 0) throw ConfigError("rational literal with zero denominator: '" + text + "'");
    return from_int128(n, d);
}

}  // namespace nlosc
