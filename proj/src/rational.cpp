#include "gf2lab/rational.hpp"

#include "gf2lab/errors.hpp"

#include <cctype>

namespace gf2lab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(text.substr(0, slash), text);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(den))
            throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
        BigInt q(std::string{den});
        if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac))
            throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
        std::string_view ip = text.substr(0, dot);
        bool negative = !ip.empty() && ip.front() == '-';
        BigInt whole = (ip.empty() || ip == "-" || ip == "+") ? BigInt(0) : parse_integer(ip, text);
        if (whole < 0) whole = -whole;
        BigInt scale = pow(BigInt(10), static_cast<unsigned>(frac.size()));
        Rational r(whole * scale + BigInt(std::string(frac)), scale);
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt from_int128(__int128 v) {
    bool negative = v < 0;
    auto mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt out(static_cast<std::uint64_t>(mag >> 64));
    out <<= 64;
    out += BigInt(static_cast<std::uint64_t>(mag));
    return negative ? BigInt(-out) : out;
}

Rational pow2(std::int64_t e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational pow(const Rational& r, unsigned e) {
    return Rational(pow(numerator(r), e), pow(denominator(r), e));
}

BigInt pow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

bool exact_log2(const Rational& r, std::int64_t& e) {
    if (r <= 0) return false;
    const BigInt& p = numerator(r);
    const BigInt& q = denominator(r);
    auto single_bit = [](const BigInt& v) { return (v & (v - 1)) == 0; };
    if (q == 1 && single_bit(p)) {
        e = static_cast<std::int64_t>(msb(p));
        return true;
    }
    if (p == 1 && single_bit(q)) {
        e = -static_cast<std::int64_t>(msb(q));
        return true;
    }
    return false;
}

} // namespace gf2lab
