#include "bzeta/checks.hpp"

namespace bzeta {

std::vector<int> primes_up_to(int n) {
    std::vector<int> primes;
    for (int c = 2; c <= n; ++c) {
        bool prime = true;
        for (int d = 2; d * d <= c; ++d)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            primes.push_back(c);
    }
    return primes;
}

BigRational von_staudt_clausen_correction(int m) {
    if (m < 1)
        throw std::invalid_argument("von_staudt_clausen_correction: requires m >= 1");
    BigRational sum;
    for (int p : primes_up_to(m + 1))
        if (m % (p - 1) == 0)
            sum += BigRational(BigInt(1), BigInt(p));
    return sum;
}

RationalFunction x_ddx(const RationalFunction& f) {
    const auto& c = f.numerator();
    const int e = f.denominator_exponent();
    if (c.empty())
        return RationalFunction({}, e + 1);
    const int d = f.degree();
    // b = N'(x)(1+x) - e N(x), degree <= d
    std::vector<BigRational> b(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        BigRational v;
        if (i + 1 <= d)
            v += BigRational(i + 1) * c[static_cast<size_t>(i + 1)];  // from N'
        if (i >= 1)
            v += BigRational(i) * c[static_cast<size_t>(i)];  // from x N'
        v -= BigRational(e) * c[static_cast<size_t>(i)];
        b[static_cast<size_t>(i)] = std::move(v);
    }
    // multiply by x
    std::vector<BigRational> out(b.size() + 1);
    for (size_t i = 0; i < b.size(); ++i)
        out[i + 1] = std::move(b[i]);
    return RationalFunction(std::move(out), e + 1);
}

}  // namespace bzeta
