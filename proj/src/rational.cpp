#include "bzeta/rational.hpp"

#include <cctype>

namespace bzeta {

BigInt factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void BigRational::canonicalize() {
    if (sgn(den_) == 0)
        throw std::invalid_argument("BigRational: zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.num_ = ::abs(num_);
    r.den_ = den_;
    return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero())
        throw std::domain_error("BigRational: division by zero");
    return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const BigRational& a, const BigRational& b) {
    // denominators are positive, so cross-multiplication preserves order
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string BigRational::str() const {
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!is_integer_token(num_part) || !is_integer_token(den_part))
        throw std::invalid_argument("BigRational::parse: expected \"num\" or \"num/den\", got \"" +
                                    std::string(text) + "\"");
    return BigRational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

double BigRational::to_double() const {
    mpq_t q;
    mpq_init(q);
    mpq_set_num(q, num_.get_mpz_t());
    mpq_set_den(q, den_.get_mpz_t());
    double d = mpq_get_d(q);
    mpq_clear(q);
    return d;
}

BigRational pow2(long e) {
    BigInt p = BigInt(1) << static_cast<unsigned long>(e < 0 ? -e : e);
    if (e < 0)
        return BigRational(BigInt(1), std::move(p));
    return BigRational(std::move(p));
}

}  // namespace bzeta
