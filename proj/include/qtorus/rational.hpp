#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qtorus/integers.hpp"

namespace qtorus {

// Exact ratio of unbounded integers, kept in canonical form:
//   den > 0 and gcd(|num|, den) = 1.
// The substrate for all energies and amplitudes.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Unbounded n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)
    Rational(Unbounded n, Unbounded d);

    const Unbounded& num() const { return num_; }
    const Unbounded& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    // Largest integer <= value, and the fractional remainder in [0, 1).
    Unbounded floor() const;
    Rational frac() const;

    // Nearest double; scales num/den so that extreme magnitudes on either
    // side do not overflow individually.
    double to_double() const;

    // Text form: "num/den", or bare "num" when den = 1.
    std::string str() const;

    // Parses the shared number grammar: optional sign, digits, optional
    // "/digits". Interior whitespace is ignored. Throws ParseError.
    static Rational parse(std::string_view text);

    // Exact value of a finite double (every finite double is dyadic).
    static Rational from_double(double x);

private:
    Unbounded num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// The largest rational g such that every xs[i]/g is a positive integer; the
// quotients are collectively coprime. Input entries must be > 0.
Rational rational_gcd(const std::vector<Rational>& xs);

}  // namespace qtorus
