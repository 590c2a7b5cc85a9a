#include "bzeta/bernoulli.hpp"

namespace bzeta {

const char* method_name(Method m) {
    switch (m) {
        case Method::Eq1: return "eq1";
        case Method::Eq2: return "eq2";
        case Method::Eq3: return "eq3";
        case Method::Eq4: return "eq4";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

std::vector<BigRational> bernoulli_sequence(int max_index) {
    if (max_index < 0)
        throw std::invalid_argument("bernoulli_sequence: negative index");
    std::vector<BigRational> b;
    b.reserve(static_cast<size_t>(max_index) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= max_index; ++m) {
        BigRational s;
        for (int j = 0; j < m; ++j)
            s += BigRational(binomial(m + 1, j)) * b[static_cast<size_t>(j)];
        b.push_back(-(s / BigRational(m + 1)));
    }
    return b;
}

BernoulliValue bernoulli_oracle(int m) {
    if (m < 0)
        throw std::invalid_argument("bernoulli_oracle: negative index");
    return {m, bernoulli_sequence(m).back(), Method::Oracle};
}

namespace {

void require_formula_domain(int r, int built_rows, const char* what) {
    if (r < 1)
        throw std::invalid_argument(std::string(what) + ": r must be >= 1");
    if (r > built_rows)
        throw std::invalid_argument(std::string(what) + ": table built only through row " +
                                    std::to_string(built_rows));
}

}  // namespace

BernoulliValue bernoulli_eq1(int r, const StirlingTable& stirling) {
    require_formula_domain(r, stirling.max_row(), "bernoulli_eq1");
    BigRational sum;
    for (int k = 1; k <= r; ++k) {
        // (2k-1)!/(k-1)! is the integer product k (k+1) ... (2k-1)
        BigInt rising = factorial(2 * k - 1) / factorial(k - 1);
        BigRational term = BigRational(stirling(r, k) * rising, k + 1) * pow2(-2 * k);
        sum += (k % 2 == 0) ? term : -term;
    }
    BigInt num = (r + 1) * (BigInt(1) << static_cast<unsigned long>(r));
    if (r % 2 != 0)
        num = -num;
    BigRational prefactor(std::move(num), (BigInt(1) << static_cast<unsigned long>(r + 1)) - 1);
    return {r + 1, prefactor * sum, Method::Eq1};
}

BernoulliValue bernoulli_eq2(int r, const EulerianTable& eulerian) {
    require_formula_domain(r, eulerian.max_row(), "bernoulli_eq2");
    BigRational sum;
    for (int l = 1; l <= r; ++l) {
        BigRational term(eulerian(r, r - l) * binomial(r - 1, l - 1), binomial(2 * r, 2 * l - 1));
        sum += (l % 2 == 0) ? term : -term;
    }
    BigInt num = (r % 2 == 0) ? BigInt(r + 1) : BigInt(-(r + 1));
    BigInt den = (BigInt(1) << static_cast<unsigned long>(r)) *
                 ((BigInt(1) << static_cast<unsigned long>(r + 1)) - 1);
    BigRational prefactor(num * binomial(2 * r, r - 1), std::move(den));
    return {r + 1, prefactor * sum, Method::Eq2};
}

BernoulliValue bernoulli_eq3(int r, const StirlingTable& stirling) {
    require_formula_domain(r, stirling.max_row(), "bernoulli_eq3");
    BigRational sum;
    for (int k = 1; k <= r; ++k) {
        BigRational term(stirling(r, k) * factorial(k - 1), k + 1);
        sum += (k % 2 == 0) ? term : -term;
    }
    return {r, (r % 2 != 0) ? sum : -sum, Method::Eq3};
}

BernoulliValue bernoulli_eq4(int r, const EulerianTable& eulerian) {
    require_formula_domain(r, eulerian.max_row(), "bernoulli_eq4");
    BigRational sum;
    for (int l = 1; l <= r; ++l) {
        BigRational term(eulerian(r, r - l), l * binomial(r + 1, l));
        sum += (l % 2 == 0) ? term : -term;
    }
    return {r, (r % 2 != 0) ? sum : -sum, Method::Eq4};
}

BigRational zeta_neg_int(int r) {
    if (r < 0)
        throw std::invalid_argument("zeta_neg_int: negative r");
    BigRational v = bernoulli_sequence(r + 1).back() / BigRational(r + 1);
    return (r % 2 == 0) ? v : -v;
}

BernoulliPolynomial::BernoulliPolynomial(int degree) : degree_(degree) {
    if (degree < 0)
        throw std::invalid_argument("BernoulliPolynomial: negative degree");
    auto b = bernoulli_sequence(degree);
    coeffs_.resize(static_cast<size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j)  // coefficient of a^j is C(m, j) B_{m-j}
        coeffs_[static_cast<size_t>(j)] =
            BigRational(binomial(degree, j)) * b[static_cast<size_t>(degree - j)];
}

BigRational BernoulliPolynomial::operator()(const BigRational& a) const {
    BigRational acc = coeffs_.back();
    for (size_t j = coeffs_.size() - 1; j-- > 0;)
        acc = acc * a + coeffs_[j];
    return acc;
}

BernoulliPolynomial bernoulli_poly(int m) {
    return BernoulliPolynomial(m);
}

BigRational hurwitz_zeta_neg_int(int r, const BigRational& a) {
    if (r < 0)
        throw std::invalid_argument("hurwitz_zeta_neg_int: negative r");
    if (a.sign() <= 0)
        throw std::invalid_argument("hurwitz_zeta_neg_int: requires a > 0");
    return -(BernoulliPolynomial(r + 1)(a) / BigRational(r + 1));
}

std::pair<BigRational, BigRational> faulhaber_check(int r, int n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("faulhaber_check: requires r >= 1 and n >= 1");
    BigInt power_sum(0);
    for (int k = 1; k <= n; ++k)
        power_sum += int_pow(BigInt(k), static_cast<unsigned long>(r));
    BigRational rhs = zeta_neg_int(r) - hurwitz_zeta_neg_int(r, BigRational(n + 1));
    return {BigRational(std::move(power_sum)), std::move(rhs)};
}

}  // namespace bzeta
