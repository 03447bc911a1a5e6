#include "altpoly/rational.hpp"

#include <cctype>
#include <ostream>

namespace altpoly {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_raw(mpq_class q) {
    if (q.get_den() == 0) throw Error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    const std::size_t slash = s.find('/');
    const auto check_part = [&](std::size_t from, std::size_t to) {
        std::size_t start = from;
        if (start < to && s[start] == '-') ++start;
        if (!all_digits(s, start, to))
            throw ParseError("invalid rational string '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_part(0, s.size());
    } else {
        check_part(0, slash);
        // The sign lives on the numerator; a signed denominator is rejected.
        if (slash + 1 >= s.size() || !all_digits(s, slash + 1, s.size()))
            throw ParseError("invalid rational string '" + s + "'");
    }
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("invalid rational string '" + s + "'");
    if (v.get_den() == 0)
        throw ParseError("zero denominator in rational string '" + s + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& r, std::size_t e) {
    Rational acc(1);
    Rational base = r;
    std::size_t n = e;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

}  // namespace altpoly
