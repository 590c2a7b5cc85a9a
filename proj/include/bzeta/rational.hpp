#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bzeta {

/// Unbounded signed integer. GMP supplies the representation; everything
/// downstream handles it with plain value semantics.
using BigInt = mpz_class;

/// n! as an exact integer. Throws std::invalid_argument for n < 0.
BigInt factorial(long n);

/// C(n, k). Out-of-range k (k < 0 or k > n) yields 0 so summation loops
/// need no edge guards. Throws std::invalid_argument for n < 0.
BigInt binomial(long n, long k);

/// base^e with e >= 0.
BigInt int_pow(const BigInt& base, unsigned long e);

/// Exact rational, kept in lowest terms with a strictly positive
/// denominator at all times. Canonical form is established in the
/// constructor, so equality is plain component-wise comparison.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long n) : num_(n), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}

    /// num/den, reduced. Throws std::invalid_argument when den == 0.
    BigRational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int  sign() const { return sgn(num_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den_ == 1; }

    BigRational operator-() const;
    BigRational abs() const;

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    /// Throws std::domain_error when b == 0.
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b);
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    /// "num/den" in base 10, reduced, sign on the numerator only;
    /// integers print without the "/1".
    std::string str() const;

    /// Inverse of str(). Accepts "[-]digits" or "[-]digits/[-]digits";
    /// throws std::invalid_argument on anything else or a zero denominator.
    static BigRational parse(std::string_view text);

    /// Nearest double, computed on the num/den pair so that huge numerator
    /// and denominator cancel before conversion.
    double to_double() const;

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

/// 2^e as an exact rational; e may be negative.
BigRational pow2(long e);

}  // namespace bzeta
