#include "qtorus/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace qtorus {

namespace {

void normalize(Unbounded& n, Unbounded& d) {
    if (d == 0) throw ParseError("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Unbounded g = gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
}

}  // namespace

Rational::Rational(Unbounded n, Unbounded d) : num_(std::move(n)), den_(std::move(d)) {
    normalize(num_, den_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize(num_, den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize(num_, den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize(num_, den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize(num_, den_);
    return *this;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw Error("rational: reciprocal of zero");
    return Rational(den_, num_);
}

Unbounded Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::frac() const { return Rational(mod_floor(num_, den_), den_); }

double Rational::to_double() const {
    if (num_ == 0) return 0.0;
    const bool neg = num_ < 0;
    Unbounded a = neg ? Unbounded(-num_) : num_;
    const Unbounded& b = den_;

    // Scale so the integer quotient carries ~62 significant bits, then place
    // the binary point with ldexp. Keeps huge num/den pairs finite even when
    // either side alone would overflow a double.
    const long ea = static_cast<long>(boost::multiprecision::msb(a));
    const long eb = static_cast<long>(boost::multiprecision::msb(b));
    const long shift = 62 - (ea - eb);
    Unbounded q;
    if (shift >= 0) {
        q = (a << static_cast<unsigned>(shift)) / b;
    } else {
        q = a / (b << static_cast<unsigned>(-shift));
    }
    double d = std::ldexp(static_cast<double>(q.convert_to<std::uint64_t>()),
                          static_cast<int>(-shift));
    return neg ? -d : d;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("number: empty token");

    const auto slash = s.find('/');
    const std::string num_part = s.substr(0, slash);
    auto parse_int = [](const std::string& t, bool allow_sign) -> Unbounded {
        if (t.empty()) throw ParseError("number: missing digits");
        std::size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i == t.size()) throw ParseError("number: missing digits after sign");
        for (std::size_t j = i; j < t.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(t[j])))
                throw ParseError("number: bad character '" + std::string(1, t[j]) + "' in \"" + t + "\"");
        }
        // cpp_int's string constructor takes a '-' sign but not a '+'
        Unbounded value(t.substr(i));
        if (t[0] == '-') value = -value;
        return value;
    };

    Unbounded n = parse_int(num_part, true);
    if (slash == std::string::npos) return Rational(std::move(n));
    if (s.find('/', slash + 1) != std::string::npos)
        throw ParseError("number: more than one '/' in \"" + s + "\"");
    Unbounded d = parse_int(s.substr(slash + 1), false);
    if (d == 0) throw ParseError("number: zero denominator in \"" + s + "\"");
    return Rational(std::move(n), std::move(d));
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw Error("from_double: value is not finite");
    if (x == 0.0) return Rational();
    int e = 0;
    const double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    const auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact
    const int e2 = e - 53;
    Unbounded n(mant);
    if (e2 >= 0) return Rational(n << static_cast<unsigned>(e2));
    return Rational(std::move(n), Unbounded(1) << static_cast<unsigned>(-e2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_gcd(const std::vector<Rational>& xs) {
    if (xs.empty()) throw EmptyList("rational_gcd: empty input list");
    Unbounded den_lcm = 1;
    for (const Rational& x : xs) {
        if (x.sign() <= 0)
            throw NonPositiveEntry("rational_gcd: entries must be > 0, got " + x.str());
        den_lcm = lcm(den_lcm, x.den());
    }
    // Over the common denominator L the inputs are integers n_i; their gcd
    // over L is the largest rational dividing every input into an integer.
    Unbounded g = 0;
    for (const Rational& x : xs) {
        g = gcd(g, x.num() * (den_lcm / x.den()));
    }
    return Rational(std::move(g), std::move(den_lcm));
}

}  // namespace qtorus
