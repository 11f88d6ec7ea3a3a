#pragma once
#include <string>

#include "wps/bigint.hpp"

namespace wps {

// Exact rational, always in lowest terms with positive denominator; zero is 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);
    static Rational from_string(const std::string& s); // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_one() const { return den_ == BigInt(1) && num_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    Rational inverse() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string to_string() const; // "p" or "p/q"

  private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

} // namespace wps
