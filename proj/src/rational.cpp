#include "latt/rational.hpp"

#include <ostream>

namespace latt {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw ParseError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw Error("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto is_digits = [](const std::string& s, std::size_t from) {
        if (from >= s.size())
            return false;
        for (std::size_t i = from; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };

    std::size_t slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    bool negative = false;
    std::size_t start = 0;
    if (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) {
        negative = num_part[0] == '-';
        start = 1;
    }
    if (!is_digits(num_part, start))
        throw ParseError("malformed rational: \"" + text + "\"");

    BigInt num(num_part.substr(start));
    if (negative)
        num = -num;
    if (slash == std::string::npos)
        return Rational(std::move(num));

    std::string den_part = text.substr(slash + 1);
    if (!is_digits(den_part, 0))
        throw ParseError("malformed rational: \"" + text + "\"");
    BigInt den(den_part);
    if (den == 0)
        throw ParseError("malformed rational (zero denominator): \"" + text + "\"");
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace latt
