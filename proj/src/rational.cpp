#include "f4gvm/rational.hpp"

#include "f4gvm/errors.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace f4gvm {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiply overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational add overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw OverflowError("rational negate overflow");
    return -a;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checked_mul(num_, o.den_ / g);
    const std::int64_t rhs = checked_mul(o.num_, den_ / g);
    *this = Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // cross-reduce first to keep intermediates small
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    const std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
    const std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = checked_neg(inv.num_);
        inv.den_ = checked_neg(inv.den_);
    }
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // a/b < c/d  <=>  a*d < c*b  (denominators positive)
    const std::int64_t lhs = checked_mul(a.num_, b.den_);
    const std::int64_t rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty())
            throw std::invalid_argument("not a rational: '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const auto den = parse_int(std::string_view(text).substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace f4gvm
