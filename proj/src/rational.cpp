#include "hlag/rational.hpp"

#include <stdexcept>

namespace hlag {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Overflow-checked multiply; the operands in this codebase stay far below
// the 128-bit ceiling after reduction, so a magnitude guard is enough.
constexpr __int128 kLimit = (__int128)1 << 100;

__int128 checked_mul(__int128 a, __int128 b) {
    if (abs128(a) > kLimit || abs128(b) > kLimit || (a != 0 && abs128(b) > kLimit / abs128(a)))
        throw std::overflow_error("Rational: product out of range");
    return a * b;
}

std::string to_string128(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + (int)(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    *this = from_parts(num, den);
}

Rational Rational::from_parts(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 g = gcd128(den_, o.den_);
    __int128 lhs_scale = o.den_ / g;
    __int128 rhs_scale = den_ / g;
    return from_parts(checked_mul(num_, lhs_scale) + checked_mul(o.num_, rhs_scale),
                      checked_mul(den_, lhs_scale));
}

Rational Rational::operator-(const Rational& o) const {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    __int128 g1 = gcd128(num_, o.den_);
    __int128 g2 = gcd128(o.num_, den_);
    return from_parts(checked_mul(num_ / g1, o.num_ / g2),
                      checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return to_string128(num_);
    return to_string128(num_) + "/" + to_string128(den_);
}

}  // namespace hlag
