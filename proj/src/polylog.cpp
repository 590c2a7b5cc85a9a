#include "bzeta/polylog.hpp"

namespace bzeta {

RationalFunction::RationalFunction(std::vector<BigRational> numerator_coeffs,
                                   int denominator_exponent)
    : coeffs_(std::move(numerator_coeffs)), den_exponent_(denominator_exponent) {
    if (denominator_exponent < 0)
        throw std::invalid_argument("RationalFunction: negative denominator exponent");
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

BigRational RationalFunction::operator()(const BigRational& x) const {
    if (den_exponent_ > 0 && x == BigRational(-1))
        throw std::domain_error("RationalFunction: pole at x = -1");
    if (coeffs_.empty())
        return BigRational();
    BigRational num = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;)
        num = num * x + coeffs_[i];
    BigRational den(1);
    const BigRational one_plus_x = BigRational(1) + x;
    for (int e = 0; e < den_exponent_; ++e)
        den *= one_plus_x;
    return num / den;
}

std::string RationalFunction::str() const {
    if (coeffs_.empty())
        return "0";
    std::string num;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        BigRational mag = c.abs();
        std::string term;
        if (i == 0)
            term = mag.str();
        else {
            if (mag != BigRational(1))
                term = mag.str() + " ";
            term += "x";
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (first) {
            num = (c.sign() < 0 ? "-" : "") + term;
            first = false;
        } else {
            num += (c.sign() < 0 ? " - " : " + ") + term;
        }
    }
    if (den_exponent_ == 0)
        return num;
    std::string den = "(1+x)";
    if (den_exponent_ > 1)
        den += "^" + std::to_string(den_exponent_);
    return "(" + num + ")/" + den;
}

RationalFunction polylog_stirling_form(int r, const StirlingTable& stirling) {
    if (r < 0)
        throw std::invalid_argument("polylog_stirling_form: negative order");
    if (r == 0)  // empty sum; the geometric series gives -x/(1+x) directly
        return RationalFunction({BigRational(0), BigRational(-1)}, 1);
    if (stirling.max_row() < r)
        throw std::invalid_argument("polylog_stirling_form: table built only through row " +
                                    std::to_string(stirling.max_row()));
    std::vector<BigInt> num(static_cast<size_t>(r) + 1, BigInt(0));
    for (int k = 1; k <= r; ++k) {
        BigInt base = factorial(k) * stirling(r, k);
        if (k % 2 != 0)
            base = -base;
        // base * x^k * (1+x)^{r-k}
        for (int i = 0; i <= r - k; ++i)
            num[static_cast<size_t>(k + i)] += base * binomial(r - k, i);
    }
    std::vector<BigRational> coeffs;
    coeffs.reserve(num.size());
    for (auto& c : num)
        coeffs.emplace_back(std::move(c));
    return RationalFunction(std::move(coeffs), r + 1);
}

RationalFunction polylog_eulerian_form(int r, const EulerianTable& eulerian) {
    if (r < 1)
        throw std::invalid_argument("polylog_eulerian_form: requires r >= 1");
    if (eulerian.max_row() < r)
        throw std::invalid_argument("polylog_eulerian_form: table built only through row " +
                                    std::to_string(eulerian.max_row()));
    std::vector<BigRational> coeffs(static_cast<size_t>(r) + 1);
    for (int i = 1; i <= r; ++i) {  // coefficient of x^i is (-1)^i <r, r-i>
        BigInt c = eulerian(r, r - i);
        coeffs[static_cast<size_t>(i)] = BigRational(i % 2 != 0 ? -c : c);
    }
    return RationalFunction(std::move(coeffs), r + 1);
}

bool forms_equal(int r, const StirlingTable& stirling, const EulerianTable& eulerian) {
    return polylog_stirling_form(r, stirling) == polylog_eulerian_form(r, eulerian);
}

BigRational polylog_eval_exact(int r, const BigRational& x, const StirlingTable& stirling) {
    return polylog_stirling_form(r, stirling)(x);
}

GeneralizedHarmonic generalized_harmonic(int n, long s) {
    if (n < 1)
        throw std::invalid_argument("generalized_harmonic: requires n >= 1");
    BigRational sum;
    for (int k = 1; k <= n; ++k) {
        BigInt p = int_pow(BigInt(k), static_cast<unsigned long>(s < 0 ? -s : s));
        sum += (s <= 0) ? BigRational(std::move(p)) : BigRational(BigInt(1), std::move(p));
    }
    return {n, s, std::move(sum)};
}

BigRational harmonic_partial_sum(int r, const BigRational& x, int terms) {
    if (r < 1)
        throw std::invalid_argument("harmonic_partial_sum: requires r >= 1");
    if (terms < 1)
        throw std::invalid_argument("harmonic_partial_sum: requires terms >= 1");
    if (!(x.abs() < BigRational(1)))
        throw std::invalid_argument("harmonic_partial_sum: requires |x| < 1");
    BigInt h(0);  // running power sum H_n^{(-r)}
    BigRational pw(1), sum;
    const BigRational neg_x = -x;
    for (int n = 1; n <= terms; ++n) {
        h += int_pow(BigInt(n), static_cast<unsigned long>(r));
        pw *= neg_x;
        sum += BigRational(h) * pw;
    }
    return sum;
}

}  // namespace bzeta
