#pragma once

#include <cstdint>
#include <string>

namespace hlag {

// Exact fraction on 128-bit integers, always stored reduced with a positive
// denominator. Intended for desk-scale certificates (products of a handful
// of small fractions); operations throw std::overflow_error if a reduced
// result no longer fits.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den = 1);

    static Rational from_parts(__int128 num, __int128 den);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    double to_double() const;
    // "p/q" (or just "p" when q == 1).
    std::string to_string() const;

  private:
    __int128 num_;
    __int128 den_;  // > 0
};

}  // namespace hlag
