#pragma once

#include "bzeta/rational.hpp"
#include "bzeta/tables.hpp"

#include <string>
#include <vector>

namespace bzeta {

/// Rational function N(x) / (1+x)^e with a dense exact-coefficient
/// numerator. This is the shape of Li_{-r}(-x): numerator of degree <= r
/// over (1+x)^{r+1}. The coefficient list never carries trailing zeros.
class RationalFunction {
public:
    RationalFunction() : den_exponent_(0) {}
    RationalFunction(std::vector<BigRational> numerator_coeffs, int denominator_exponent);

    /// coefficient of x^i; empty for the zero function
    const std::vector<BigRational>& numerator() const { return coeffs_; }
    int denominator_exponent() const { return den_exponent_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero

    /// Exact evaluation. Throws std::domain_error at the pole x = -1.
    BigRational operator()(const BigRational& x) const;

    /// "(c1 x + c2 x^2 + ...)/(1+x)^e"
    std::string str() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.den_exponent_ == b.den_exponent_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    std::vector<BigRational> coeffs_;
    int den_exponent_;
};

/// Li_{-r}(-x) = sum_{k=1}^{r} k! S(r,k) (-x)^k (1+x)^{r-k} / (1+x)^{r+1},
/// expanded to a single numerator over (1+x)^{r+1}. The sum is empty at
/// r = 0, where Li_0(-x) = -x/(1+x) comes from the geometric series.
RationalFunction polylog_stirling_form(int r, const StirlingTable& stirling);

/// Li_{-r}(-x) = sum_{j=0}^{r-1} <r, j> (-x)^{r-j} / (1+x)^{r+1}, r >= 1.
RationalFunction polylog_eulerian_form(int r, const EulerianTable& eulerian);

/// Coefficient-level identity of the two closed forms (both normalized over
/// (1+x)^{r+1}); decided exactly, never by sampling.
bool forms_equal(int r, const StirlingTable& stirling, const EulerianTable& eulerian);

/// Exact Li_{-r}(-x) via the Stirling form. Throws at the pole x = -1.
BigRational polylog_eval_exact(int r, const BigRational& x, const StirlingTable& stirling);

/// H_n^{(s)} = sum_{k=1}^{n} k^{-s}: a power sum for s <= 0, a rational
/// harmonic value for s >= 1.
struct GeneralizedHarmonic {
    int n;
    long s;
    BigRational value;
};

GeneralizedHarmonic generalized_harmonic(int n, long s);

/// sum_{n=1}^{terms} H_n^{(-r)} (-x)^n, the truncation of the generating
/// series for Li_{-r}(-x)/(1+x). Requires |x| < 1 and terms >= 1.
BigRational harmonic_partial_sum(int r, const BigRational& x, int terms);

}  // namespace bzeta
