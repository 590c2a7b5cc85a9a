#pragma once

#include "bzeta/rational.hpp"
#include "bzeta/tables.hpp"

#include <utility>
#include <vector>

namespace bzeta {

/// Which route produced a Bernoulli number. eq1/eq3 are the Stirling-number
/// formulas, eq2/eq4 the Eulerian-number formulas, oracle the classical
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
enum class Method { Eq1, Eq2, Eq3, Eq4, Oracle };

const char* method_name(Method m);

struct BernoulliValue {
    int index;          // subscript of B
    BigRational value;  // exact B_index
    Method method;
};

/// B_0 .. B_max_index by the recurrence, with B_0 = 1 and B_1 = -1/2.
std::vector<BigRational> bernoulli_sequence(int max_index);

/// B_m via the recurrence. Independent of the table-based formulas below;
/// used as the cross-validation reference throughout.
BernoulliValue bernoulli_oracle(int m);

/// B_{r+1} = [(-1)^r (r+1) 2^r / (2^{r+1}-1)]
///           * sum_{k=1}^{r} [S(r,k)/(k+1)] (-1)^k 2^{-2k} (2k-1)!/(k-1)!
/// Requires r >= 1 and a Stirling table built through row r.
BernoulliValue bernoulli_eq1(int r, const StirlingTable& stirling);

/// B_{r+1} = [(-1)^r (r+1) / (2^r (2^{r+1}-1))] C(2r, r-1)
///           * sum_{l=1}^{r} (-1)^l <r, r-l> C(r-1, l-1) / C(2r, 2l-1)
/// Requires r >= 1 and an Eulerian table built through row r.
BernoulliValue bernoulli_eq2(int r, const EulerianTable& eulerian);

/// B_r from (-1)^{r-1} B_r = sum_{k=1}^{r} (-1)^k [S(r,k)/(k+1)] (k-1)!
BernoulliValue bernoulli_eq3(int r, const StirlingTable& stirling);

/// B_r from (-1)^{r-1} B_r = sum_{l=1}^{r} <r, r-l> (-1)^l / (l C(r+1, l))
BernoulliValue bernoulli_eq4(int r, const EulerianTable& eulerian);

/// zeta(-r) = (-1)^r B_{r+1} / (r+1), exact. Requires r >= 0.
BigRational zeta_neg_int(int r);

/// B_m(a) = sum_{i=0}^{m} C(m, i) B_i a^{m-i}, coefficients stored by
/// ascending power of a. B_m(0) is the m-th Bernoulli number.
class BernoulliPolynomial {
public:
    explicit BernoulliPolynomial(int degree);

    int degree() const { return degree_; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational operator()(const BigRational& a) const;

private:
    int degree_;
    std::vector<BigRational> coeffs_;
};

BernoulliPolynomial bernoulli_poly(int m);

/// zeta(-r, a) = -B_{r+1}(a) / (r+1), exact. Requires r >= 0 and a > 0.
BigRational hurwitz_zeta_neg_int(int r, const BigRational& a);

/// Both sides of the power-sum identity
///   sum_{k=1}^{n} k^r  =  zeta(-r) - zeta(-r, n+1),
/// the left computed directly and the right through Bernoulli polynomials.
std::pair<BigRational, BigRational> faulhaber_check(int r, int n);

}  // namespace bzeta
