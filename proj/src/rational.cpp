#include "qcenter/rational.hpp"

#include <cctype>

namespace qcenter {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) return std::nullopt;

    bool neg = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) return std::nullopt;

    auto slash = body.find('/');
    auto dot = body.find('.');
    Rational value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) return std::nullopt;
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        Integer d(den, 10);
        if (d == 0) return std::nullopt;
        value = Rational(Integer(num, 10), d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string ipart = body.substr(0, dot);
        std::string fpart = body.substr(dot + 1);
        if (ipart.empty() && fpart.empty()) return std::nullopt;
        if (!ipart.empty() && !all_digits(ipart)) return std::nullopt;
        if (!fpart.empty() && !all_digits(fpart)) return std::nullopt;
        Integer scale = 1;
        for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        Integer digits((ipart.empty() ? "0" : ipart) + fpart, 10);
        value = Rational(digits, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) return std::nullopt;
        value = Rational(Integer(body, 10));
    }
    if (neg) value = -value;
    return value;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return Rational(factorial(n)) / Rational(factorial(k) * factorial(n - k));
}

}  // namespace qcenter
