#include "knc/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "knc/errors.hpp"

namespace knc {

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    auto num_text = trim(s.substr(0, slash));
    if (!valid_integer_text(num_text))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer num(strip_plus(num_text), 10);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        auto den_text = trim(s.substr(slash + 1));
        if (!valid_integer_text(den_text) || den_text.front() == '-')
            throw ParseError("malformed denominator in '" + std::string(text) + "'");
        den = Integer(strip_plus(den_text), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Integer a = sqrt(Integer(q.get_num()));
    Integer b = sqrt(Integer(q.get_den()));
    return Rational(a, b);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long gcd_l(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::labs(a / gcd_l(a, b) * b);
}

long mod_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace knc
